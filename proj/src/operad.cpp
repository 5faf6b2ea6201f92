#include "quadop/operad.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadop {

int tree_compare(const TreeMono& t1, const TreeMono& t2) {
    unsigned a1 = t1.arity(), a2 = t2.arity();
    if (a1 != a2) return a1 > a2 ? -1 : 1;  // higher arity precedes
    if (t1.is_leaf()) return 0;             // equal arity 1
    const auto& k1 = t1.children();
    const auto& k2 = t2.children();
    for (std::size_t i = 0; i < k1.size(); ++i) {
        int c = tree_compare(k1[i], k2[i]);
        if (c != 0) return c;
    }
    return 0;
}

namespace {

// Replaces the arg-th leaf (1-based, counted left to right) by beta.
// Returns the remaining count if the leaf lies outside this subtree.
bool substitute_leaf(TreeMono& node, unsigned& arg, const TreeMono& beta) {
    if (node.is_leaf()) {
        if (arg == 1) {
            node = beta;
            return true;
        }
        --arg;
        return false;
    }
    std::vector<TreeMono> kids = node.children();
    for (auto& k : kids) {
        if (substitute_leaf(k, arg, beta)) {
            node = TreeMono(std::move(kids));
            return true;
        }
    }
    return false;
}

}  // namespace

TreeMono compose(const TreeMono& alpha, unsigned i, const TreeMono& beta) {
    if (i < 1 || i > alpha.arity())
        throw std::out_of_range("compose: argument index out of range");
    TreeMono result = alpha;
    unsigned arg = i;
    substitute_leaf(result, arg, beta);
    return result;
}

int Basis::index_of(const TreeMono& t) const {
    std::size_t lo = 0, hi = monomials.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        int c = tree_compare(monomials[mid], t);
        if (c == 0) return static_cast<int>(mid);
        if (c < 0) lo = mid + 1;
        else hi = mid;
    }
    return -1;
}

namespace {

void gen_weight_lists(unsigned n, unsigned w,
                      const std::vector<std::vector<TreeMono>>& lower,
                      std::vector<TreeMono>& kids, std::size_t pos,
                      unsigned remaining, std::vector<TreeMono>& out) {
    if (pos + 1 == n) {
        kids[pos] = TreeMono();  // placeholder, filled below
        for (const auto& t : lower[remaining]) {
            kids[pos] = t;
            out.emplace_back(kids);
        }
        return;
    }
    for (unsigned wi = 0; wi <= remaining; ++wi) {
        for (const auto& t : lower[wi]) {
            kids[pos] = t;
            gen_weight_lists(n, w, lower, kids, pos + 1, remaining - wi, out);
        }
    }
}

}  // namespace

Basis enumerate_basis(unsigned n, unsigned w) {
    if (n < 2) throw std::invalid_argument("enumerate_basis: n >= 2 required");
    std::vector<std::vector<TreeMono>> by_weight(w + 1);
    by_weight[0] = {TreeMono::leaf()};
    for (unsigned k = 1; k <= w; ++k) {
        std::vector<TreeMono> kids(n);
        gen_weight_lists(n, k, by_weight, kids, 0, k - 1, by_weight[k]);
    }
    Basis b;
    b.n = n;
    b.w = w;
    b.monomials = std::move(by_weight[w]);
    std::sort(b.monomials.begin(), b.monomials.end(),
              [](const TreeMono& x, const TreeMono& y) {
                  return tree_compare(x, y) < 0;
              });
    return b;
}

mpz_class catalan_dim(unsigned n, unsigned w) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n) * w, w);
    mpz_class den = (n - 1) * static_cast<unsigned long>(w) + 1;
    return binom / den;
}

std::vector<std::vector<Poly>> consequences(const Relation& rho) {
    if (rho.coeff.size() != 4)
        throw std::invalid_argument("consequences: quaternary relation expected");
    const unsigned n = 4;
    static const Basis arity10 = enumerate_basis(n, 3);
    const TreeMono phi = TreeMono::generator(n);
    std::vector<TreeMono> phi2(n);
    for (unsigned k = 0; k < n; ++k) phi2[k] = compose(phi, k + 1, phi);

    auto expand = [&](bool right, unsigned pos) {
        std::vector<Poly> row(arity10.monomials.size(), Poly(rho.ring));
        for (unsigned k = 0; k < n; ++k) {
            if (rho.coeff[k].is_zero()) continue;
            TreeMono t = right ? compose(phi2[k], pos, phi)
                               : compose(phi, pos, phi2[k]);
            int idx = arity10.index_of(t);
            if (idx < 0) throw std::logic_error("consequence tree not in basis");
            row[static_cast<std::size_t>(idx)] += rho.coeff[k];
        }
        return row;
    };

    std::vector<std::vector<Poly>> rows;
    rows.reserve(11);
    for (unsigned i = 1; i <= 2 * n - 1; ++i) rows.push_back(expand(true, i));
    for (unsigned j = 1; j <= n; ++j) rows.push_back(expand(false, j));
    return rows;
}

PolyMatrix consequence_matrix(const std::vector<Relation>& relations) {
    if (relations.empty())
        throw std::invalid_argument("consequence_matrix: no relations");
    RingPtr ring = relations[0].ring;
    std::vector<std::vector<Poly>> rows;
    for (const auto& rel : relations) {
        require_same_ring(ring, rel.ring);
        for (auto& row : consequences(rel)) {
            if (std::find(rows.begin(), rows.end(), row) == rows.end())
                rows.push_back(std::move(row));
        }
    }
    auto support = [](const std::vector<Poly>& row) {
        std::vector<std::size_t> s;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) s.push_back(j);
        return s;
    };
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) order[i] = i;
    std::vector<std::vector<std::size_t>> sup(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) sup[i] = support(rows[i]);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) {
                         const auto &sx = sup[x], &sy = sup[y];
                         std::size_t m = std::min(sx.size(), sy.size());
                         for (std::size_t k = 0; k < m; ++k)
                             if (sx[k] != sy[k]) return sx[k] < sy[k];
                         // shorter support = trailing +infinity, sorts after
                         return sx.size() > sy.size();
                     });
    PolyMatrix m(ring, rows.size(), 22);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < 22; ++j) m.at(i, j) = rows[order[i]][j];
    return m;
}

}  // namespace quadop
