#include "quadop/matforms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quadop {

ScalarMatrix<Rational> as_scalar_matrix(const PolyMatrix& A) {
    ScalarMatrix<Rational> m(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (!A.at(i, j).is_constant())
                throw std::invalid_argument("as_scalar_matrix: non-constant entry");
            m.at(i, j) = A.at(i, j).constant_value();
        }
    return m;
}

// ---------------------------------------------------------------------------
// Hermite normal form over F[x]
// ---------------------------------------------------------------------------

namespace {

// Univariate division: f = q*g + rem with deg rem < deg g.
std::pair<Poly, Poly> divmod_univariate(const Poly& f, const Poly& g) {
    Poly q(f.ring()), rem = f;
    while (!rem.is_zero() && g.leading_mono().divides(rem.leading_mono())) {
        Mono qm = g.leading_mono().quotient_of(rem.leading_mono());
        Rational qc = rem.leading_coeff() / g.leading_coeff();
        q += Poly(f.ring(), qm, qc);
        rem -= g.times_term(qm, qc);
    }
    return {q, rem};
}

}  // namespace

PolyMatrix hnf_univariate(const PolyMatrix& A) {
    if (A.ring()->nvars() > 1)
        throw std::invalid_argument("hnf_univariate: ring must be univariate");
    PolyMatrix m = A;
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
        // Euclidean algorithm on the column entries at or below the pivot
        while (true) {
            std::vector<std::size_t> nz;
            for (std::size_t i = r; i < m.rows(); ++i)
                if (!m.at(i, j).is_zero()) nz.push_back(i);
            if (nz.size() <= 1) break;
            std::size_t best = nz[0];
            for (auto i : nz)
                if (m.at(i, j).total_degree() < m.at(best, j).total_degree())
                    best = i;
            for (auto i : nz) {
                if (i == best) continue;
                auto [q, rem] = divmod_univariate(m.at(i, j), m.at(best, j));
                (void)rem;
                m.row_addmul(i, best, -q);
            }
        }
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, j).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, r);
        Rational lc = m.at(r, j).leading_coeff();
        if (!lc.is_one()) m.scale_row(r, lc.inverse());
        for (std::size_t i = 0; i < r; ++i) {
            if (m.at(i, j).is_zero()) continue;
            auto [q, rem] = divmod_univariate(m.at(i, j), m.at(r, j));
            (void)rem;
            if (!q.is_zero()) m.row_addmul(i, r, -q);
        }
        ++r;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Partial Smith form
// ---------------------------------------------------------------------------

std::string ElemOp::str() const {
    auto R = [](std::size_t k) { return "R" + std::to_string(k + 1); };
    auto C = [](std::size_t k) { return "C" + std::to_string(k + 1); };
    auto addend = [this](const std::string& target) {
        Poly mag = coeff;
        bool neg = coeff.leading_coeff().sign() < 0;
        if (neg) mag = -mag;
        std::string ms = mag.str();
        std::string op = neg ? " - " : " + ";
        if (ms == "1") return op + target;
        if (mag.nterms() > 1) return op + "(" + ms + ")*" + target;
        return op + ms + "*" + target;
    };
    switch (kind) {
        case Kind::row_swap: return R(i) + " <-> " + R(j);
        case Kind::col_swap: return C(i) + " <-> " + C(j);
        case Kind::row_scale: return R(i) + " *= " + coeff.str();
        case Kind::row_add: return R(i) + addend(R(j));
        case Kind::col_add: return C(i) + addend(C(j));
    }
    return {};
}

PSFResult partial_smith(const PolyMatrix& A) {
    const std::size_t mrows = A.rows(), ncols = A.cols();
    PSFResult res;
    res.C = A;
    res.U = PolyMatrix::identity(A.ring(), mrows);
    res.V = PolyMatrix::identity(A.ring(), ncols);
    PolyMatrix& m = res.C;
    const RingPtr& ring = A.ring();
    std::size_t r = 0;
    while (r < mrows && r < ncols) {
        std::size_t iter = r + 1;
        // first row at or below r holding a nonzero scalar in columns >= r
        std::size_t found_row = mrows;
        for (std::size_t i = r; i < mrows && found_row == mrows; ++i)
            for (std::size_t j = r; j < ncols; ++j)
                if (m.at(i, j).is_nonzero_scalar()) {
                    found_row = i;
                    break;
                }
        if (found_row == mrows) break;
        if (found_row != r) {
            m.swap_rows(found_row, r);
            res.U.swap_rows(found_row, r);
            res.ops.push_back({ElemOp::Kind::row_swap, found_row, r, Poly(ring), iter});
        }
        std::size_t found_col = r;
        while (!m.at(r, found_col).is_nonzero_scalar()) ++found_col;
        if (found_col != r) {
            m.swap_cols(found_col, r);
            res.V.swap_cols(found_col, r);
            res.ops.push_back({ElemOp::Kind::col_swap, found_col, r, Poly(ring), iter});
        }
        Rational piv = m.at(r, r).constant_value();
        if (!piv.is_one()) {
            Rational q = piv.inverse();
            m.scale_row(r, q);
            res.U.scale_row(r, q);
            res.ops.push_back({ElemOp::Kind::row_scale, r, r, Poly(ring, q), iter});
        }
        for (std::size_t i = r + 1; i < mrows; ++i) {
            if (m.at(i, r).is_zero()) continue;
            Poly c = -m.at(i, r);
            m.row_addmul(i, r, c);
            res.U.row_addmul(i, r, c);
            res.ops.push_back({ElemOp::Kind::row_add, i, r, c, iter});
        }
        for (std::size_t j = r + 1; j < ncols; ++j) {
            if (m.at(r, j).is_zero()) continue;
            Poly c = -m.at(r, j);
            m.col_addmul(j, r, c);
            res.V.col_addmul(j, r, c);
            res.ops.push_back({ElemOp::Kind::col_add, j, r, c, iter});
        }
        ++r;
    }
    res.r = r;
    std::vector<std::size_t> ri, ci;
    for (std::size_t i = r; i < mrows; ++i) ri.push_back(i);
    for (std::size_t j = r; j < ncols; ++j) ci.push_back(j);
    res.B = m.submatrix(ri, ci);
    return res;
}

// ---------------------------------------------------------------------------
// Module Groebner bases (position over term, leftmost position strongest)
// ---------------------------------------------------------------------------

namespace {

using Vec = std::vector<Poly>;

// Scales a row to integer coefficients with content 1 and positive lead.
void vec_make_primitive(std::vector<Poly>& v, std::vector<Poly>& expr) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& p : v)
        for (const auto& t : p.terms()) {
            mpz_class d = t.second.den(), g;
            mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            den_lcm = den_lcm / g * d;
        }
    for (const auto& p : v)
        for (const auto& t : p.terms()) {
            mpz_class n = t.second.num() * (den_lcm / t.second.den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
    if (num_gcd == 0) return;
    Rational scale{mpq_class(den_lcm, num_gcd)};
    for (auto& p : v) p = p.scaled(scale);
    for (auto& p : expr) p = p.scaled(scale);
}

int vec_lead_pos(const Vec& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) return static_cast<int>(j);
    return -1;
}

struct TrackedVec {
    Vec v;
    Vec expr;
};

TrackedVec vec_times_term(const TrackedVec& g, const Mono& m, const Rational& c) {
    TrackedVec r;
    r.v.reserve(g.v.size());
    r.expr.reserve(g.expr.size());
    for (auto& p : g.v) r.v.push_back(p.times_term(m, c));
    for (auto& p : g.expr) r.expr.push_back(p.times_term(m, c));
    return r;
}

void vec_sub(TrackedVec& f, const TrackedVec& g) {
    for (std::size_t j = 0; j < f.v.size(); ++j) f.v[j] -= g.v[j];
    for (std::size_t j = 0; j < f.expr.size(); ++j) f.expr[j] -= g.expr[j];
}

std::size_t vec_terms(const Vec& v) {
    std::size_t n = 0;
    for (auto& p : v) n += p.nterms();
    return n;
}

// Normal form of f against the basis elements enabled in `use` (all, when
// `use` is empty), skipping index `skip`. Reducers with fewer terms are
// preferred. With head_only the reduction stops at the first irreducible
// leading term; the full form reduces every term.
TrackedVec vec_reduce(TrackedVec f, const std::vector<TrackedVec>& basis,
                      std::size_t skip, const std::vector<bool>& use = {},
                      bool head_only = false) {
    RingPtr ring = f.v.front().ring();
    TrackedVec result;
    result.v.assign(f.v.size(), Poly(ring));
    while (true) {
        int p = vec_lead_pos(f.v);
        if (p < 0) break;
        auto pos = static_cast<std::size_t>(p);
        const auto& lt = f.v[pos].leading();
        std::size_t chosen = basis.size(), chosen_terms = 0;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || (!use.empty() && !use[k])) continue;
            const auto& g = basis[k];
            if (vec_lead_pos(g.v) != p) continue;
            if (!g.v[pos].leading_mono().divides(lt.first)) continue;
            std::size_t nt = vec_terms(g.v);
            if (chosen == basis.size() || nt < chosen_terms) {
                chosen = k;
                chosen_terms = nt;
            }
        }
        if (chosen != basis.size()) {
            const Poly& gp = basis[chosen].v[pos];
            vec_sub(f, vec_times_term(basis[chosen],
                                      gp.leading_mono().quotient_of(lt.first),
                                      lt.second / gp.leading_coeff()));
        } else {
            if (head_only) break;
            Poly term(ring, lt.first, lt.second);
            result.v[pos] += term;
            f.v[pos] -= term;
        }
    }
    if (head_only) {
        result.v = std::move(f.v);
        result.expr = std::move(f.expr);
        return result;
    }
    // the expression updates accumulated on f describe the remainder
    result.expr = std::move(f.expr);
    return result;
}

bool vec_is_zero(const Vec& v) { return vec_lead_pos(v) < 0; }

}  // namespace

PolyMatrix ModuleGB::matrix() const {
    PolyMatrix m(ring, rows.size() + zero_display_rows, cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i].v[j];
    return m;
}

ModuleGB module_gb(const PolyMatrix& A, bool track_expressions) {
    const RingPtr& ring = A.ring();
    const std::size_t t = A.cols();
    std::vector<TrackedVec> g;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        TrackedVec tv;
        tv.v.reserve(t);
        for (std::size_t j = 0; j < t; ++j) tv.v.push_back(A.at(i, j));
        if (track_expressions) {
            tv.expr.assign(A.rows(), Poly(ring));
            tv.expr[i] = Poly(ring, Rational(1));
        }
        if (!vec_is_zero(tv.v)) g.push_back(std::move(tv));
    }

    // Buchberger over the free module. Pairs are formed only between elements
    // whose leading terms share a position. The basis is kept minimal: when a
    // new element's leading term divides an existing one, the old element is
    // retired and requeued for reduction against the updated basis.
    struct ModPair {
        std::size_t i, k, pos;
        Mono lcm;
    };
    std::vector<TrackedVec> basis = std::move(g);
    std::vector<bool> alive(basis.size(), true);
    std::vector<ModPair> pairs;
    std::vector<TrackedVec> queue;

    auto reduce_against_alive = [&](TrackedVec tv) {
        return vec_reduce(std::move(tv), basis, basis.size(), alive, true);
    };
    auto insert_element = [&](TrackedVec red) {
        vec_make_primitive(red.v, red.expr);
        auto pos = static_cast<std::size_t>(vec_lead_pos(red.v));
        const Mono& lm = red.v[pos].leading_mono();
        for (std::size_t m = 0; m < basis.size(); ++m) {
            if (!alive[m]) continue;
            if (vec_lead_pos(basis[m].v) != static_cast<int>(pos)) continue;
            if (lm.divides(basis[m].v[pos].leading_mono())) {
                alive[m] = false;
                queue.push_back(std::move(basis[m]));
                basis[m] = TrackedVec{};
                pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                           [m](const ModPair& pr) {
                                               return pr.i == m || pr.k == m;
                                           }),
                            pairs.end());
            }
        }
        std::size_t h = basis.size();
        // Gebauer-Moller B-criterion: an old pair whose lcm is a proper
        // multiple of the new leading term is subsumed by the new pairs.
        pairs.erase(std::remove_if(
                        pairs.begin(), pairs.end(),
                        [&](const ModPair& pr) {
                            if (pr.pos != pos || !lm.divides(pr.lcm)) return false;
                            Mono li = Mono::lcm(
                                basis[pr.i].v[pos].leading_mono(), lm);
                            Mono lk = Mono::lcm(
                                basis[pr.k].v[pos].leading_mono(), lm);
                            return li != pr.lcm && lk != pr.lcm;
                        }),
                    pairs.end());
        // new pairs, pruned by the M/F criteria (keep minimal distinct lcms)
        std::vector<ModPair> fresh;
        for (std::size_t i = 0; i < h; ++i) {
            if (!alive[i] || vec_lead_pos(basis[i].v) != static_cast<int>(pos))
                continue;
            fresh.push_back({i, h, pos,
                             Mono::lcm(basis[i].v[pos].leading_mono(), lm)});
        }
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t x = 0; x < fresh.size(); ++x)
            for (std::size_t y = 0; y < fresh.size(); ++y) {
                if (x == y || !keep[x] || !keep[y]) continue;
                if (fresh[y].lcm != fresh[x].lcm &&
                    fresh[y].lcm.divides(fresh[x].lcm))
                    keep[x] = false;
            }
        for (std::size_t x = 0; x < fresh.size(); ++x) {
            if (!keep[x]) continue;
            // F-criterion: among equal lcms keep a single representative
            // (the product criterion is not sound for modules, so coprime
            // classes are still processed)
            for (std::size_t y = x + 1; y < fresh.size(); ++y)
                if (keep[y] && fresh[y].lcm == fresh[x].lcm) keep[y] = false;
            pairs.push_back(fresh[x]);
        }
        basis.push_back(std::move(red));
        alive.push_back(true);
    };

    std::vector<TrackedVec> inputs = std::move(basis);
    basis.clear();
    alive.clear();
    for (auto& tv : inputs) queue.push_back(std::move(tv));

    while (!queue.empty() || !pairs.empty()) {
        if (!queue.empty()) {
            TrackedVec tv = std::move(queue.back());
            queue.pop_back();
            TrackedVec red = reduce_against_alive(std::move(tv));
            if (!vec_is_zero(red.v)) insert_element(std::move(red));
            continue;
        }
        // strongest (leftmost) position first, then the smallest lcm monomial
        std::size_t best = 0;
        for (std::size_t p = 1; p < pairs.size(); ++p) {
            if (pairs[p].pos < pairs[best].pos ||
                (pairs[p].pos == pairs[best].pos &&
                 mono_compare(*ring, pairs[p].lcm, pairs[best].lcm) < 0))
                best = p;
        }
        ModPair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        const Poly &fi = basis[pr.i].v[pr.pos], &fk = basis[pr.k].v[pr.pos];
        TrackedVec s = vec_times_term(basis[pr.i],
                                      fi.leading_mono().quotient_of(pr.lcm),
                                      fi.leading_coeff().inverse());
        vec_sub(s, vec_times_term(basis[pr.k],
                                  fk.leading_mono().quotient_of(pr.lcm),
                                  fk.leading_coeff().inverse()));
        TrackedVec red = reduce_against_alive(std::move(s));
        if (!vec_is_zero(red.v)) insert_element(std::move(red));
    }

    std::vector<TrackedVec> g2;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (alive[i]) g2.push_back(std::move(basis[i]));
    g = std::move(g2);

    // inter-reduce to the canonical reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            TrackedVec h = vec_reduce(g[i], g, i);
            if (h.v != g[i].v) {
                changed = true;
                if (vec_is_zero(h.v))
                    g.erase(g.begin() + static_cast<std::ptrdiff_t>(i--));
                else
                    g[i] = std::move(h);
            }
        }
    }
    for (auto& tv : g) {
        auto pos = static_cast<std::size_t>(vec_lead_pos(tv.v));
        Rational inv = tv.v[pos].leading_coeff().inverse();
        for (auto& p : tv.v) p = p.scaled(inv);
        for (auto& p : tv.expr) p = p.scaled(inv);
    }
    std::sort(g.begin(), g.end(), [&](const TrackedVec& x, const TrackedVec& y) {
        int px = vec_lead_pos(x.v), py = vec_lead_pos(y.v);
        if (px != py) return px < py;
        auto pos = static_cast<std::size_t>(px);
        return mono_compare(*ring, x.v[pos].leading_mono(),
                            y.v[pos].leading_mono()) > 0;
    });

    ModuleGB out;
    out.ring = ring;
    out.cols = t;
    out.input_rows = A.rows();
    for (auto& tv : g) out.rows.push_back({std::move(tv.v), std::move(tv.expr)});
    // generic rank read off the basis: unit-led rows contribute an identity
    // block, the rest contributes its rank over the fraction field
    std::size_t units = 0;
    std::vector<std::size_t> other_rows;
    std::vector<bool> unit_col(t, false);
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        int p = out.rows[i].lead_pos();
        const Poly& lead = out.rows[i].v[static_cast<std::size_t>(p)];
        if (lead.is_nonzero_scalar()) {
            ++units;
            unit_col[static_cast<std::size_t>(p)] = true;
        } else {
            other_rows.push_back(i);
        }
    }
    PolyMatrix rest(ring, other_rows.size(), t);
    for (std::size_t i = 0; i < other_rows.size(); ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (!unit_col[j]) rest.at(i, j) = out.rows[other_rows[i]].v[j];
    out.generic_rank = units + generic_rank(rest);
    out.zero_display_rows = out.input_rows > out.generic_rank
                                ? out.input_rows - out.generic_rank
                                : 0;
    return out;
}

namespace {

// Normal form of row[p] against the stage rows' p-entries, carried on whole
// rows. Rows in `stage` all lead at position p.
Vec nf_entry_at(Vec row, std::size_t p, const std::vector<Vec>& stage,
                std::size_t skip) {
    RingPtr ring = row[p].ring();
    Poly done(ring);
    while (!row[p].is_zero()) {
        const auto& lt = row[p].leading();
        bool stepped = false;
        for (std::size_t k = 0; k < stage.size(); ++k) {
            if (k == skip) continue;
            const Poly& gp = stage[k][p];
            if (gp.leading_mono().divides(lt.first)) {
                Mono qm = gp.leading_mono().quotient_of(lt.first);
                Rational qc = lt.second / gp.leading_coeff();
                for (std::size_t j = 0; j < row.size(); ++j)
                    if (!stage[k][j].is_zero())
                        row[j] -= stage[k][j].times_term(qm, qc);
                stepped = true;
                break;
            }
        }
        if (!stepped) {
            Poly term(ring, lt.first, lt.second);
            done += term;
            row[p] -= term;
        }
    }
    row[p] = std::move(done);
    return row;
}

}  // namespace

PolyMatrix column_canonical_form(const PolyMatrix& A) {
    const RingPtr& ring = A.ring();
    const std::size_t t = A.cols();
    std::vector<Vec> done, pending;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Vec row;
        row.reserve(t);
        for (std::size_t j = 0; j < t; ++j) row.push_back(A.at(i, j));
        if (!vec_is_zero(row)) pending.push_back(std::move(row));
    }

    for (std::size_t p = 0; p < t; ++p) {
        std::vector<Vec> work, rest;
        for (auto& r : pending)
            (vec_lead_pos(r) == static_cast<int>(p) ? work : rest)
                .push_back(std::move(r));
        pending = std::move(rest);
        if (work.empty()) continue;

        // Buchberger on the p-entries, carried on rows.
        std::vector<Vec> stage;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        auto insert_stage = [&](Vec row) {
            const Mono& lm = row[p].leading_mono();
            for (std::size_t m = 0; m < stage.size(); ++m) {
                if (lm.divides(stage[m][p].leading_mono())) {
                    work.push_back(std::move(stage[m]));
                    stage.erase(stage.begin() + static_cast<std::ptrdiff_t>(m));
                    pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                               [m](const auto& pr) {
                                                   return pr.first == m ||
                                                          pr.second == m;
                                               }),
                                pairs.end());
                    for (auto& pr : pairs) {
                        if (pr.first > m) --pr.first;
                        if (pr.second > m) --pr.second;
                    }
                    --m;
                }
            }
            for (std::size_t i = 0; i < stage.size(); ++i)
                pairs.emplace_back(i, stage.size());
            stage.push_back(std::move(row));
        };
        while (!work.empty() || !pairs.empty()) {
            Vec candidate;
            bool srow = false;
            if (!work.empty()) {
                candidate = std::move(work.back());
                work.pop_back();
            } else {
                srow = true;
                auto [i, k] = pairs.back();
                pairs.pop_back();
                const Poly &fi = stage[i][p], &fk = stage[k][p];
                Mono l = Mono::lcm(fi.leading_mono(), fk.leading_mono());
                candidate.assign(t, Poly(ring));
                Mono qi = fi.leading_mono().quotient_of(l);
                Mono qk = fk.leading_mono().quotient_of(l);
                Rational ci = fi.leading_coeff().inverse();
                Rational ck = fk.leading_coeff().inverse();
                for (std::size_t j = 0; j < t; ++j)
                    candidate[j] = stage[i][j].times_term(qi, ci) -
                                   stage[k][j].times_term(qk, ck);
            }
            candidate = nf_entry_at(std::move(candidate), p, stage, stage.size());
            if (candidate[p].is_zero()) {
                // an S-row reducing to zero here is a redundant combination
                // of kept rows and is dropped; content rows fall through
                if (!srow && !vec_is_zero(candidate))
                    pending.push_back(std::move(candidate));
                continue;
            }
            insert_stage(std::move(candidate));
        }
        // reduced basis of the column ideal: tails of the p-entries reduced,
        // rows made monic
        for (std::size_t i = 0; i < stage.size(); ++i)
            stage[i] = nf_entry_at(std::move(stage[i]), p, stage, i);
        for (auto& row : stage) {
            Rational inv = row[p].leading_coeff().inverse();
            if (!inv.is_one())
                for (auto& e : row) e = e.scaled(inv);
        }
        std::sort(stage.begin(), stage.end(), [&](const Vec& x, const Vec& y) {
            return mono_compare(*ring, x[p].leading_mono(),
                                y[p].leading_mono()) < 0;
        });
        // normal-form the p-entries of the finished rows (above the pivot)
        for (auto& d : done) d = nf_entry_at(std::move(d), p, stage, stage.size());
        for (auto& s : stage) done.push_back(std::move(s));
    }

    std::sort(done.begin(), done.end(), [&](const Vec& x, const Vec& y) {
        int px = vec_lead_pos(x), py = vec_lead_pos(y);
        if (px != py) return px < py;
        auto p = static_cast<std::size_t>(px);
        return mono_compare(*ring, x[p].leading_mono(), y[p].leading_mono()) < 0;
    });
    PolyMatrix out(ring, done.size(), t);
    for (std::size_t i = 0; i < done.size(); ++i)
        for (std::size_t j = 0; j < t; ++j) out.at(i, j) = done[i][j];
    return out;
}

// ---------------------------------------------------------------------------
// Determinants, generic rank, determinantal ideals
// ---------------------------------------------------------------------------

Poly determinant_cofactor(const PolyMatrix& A) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = A.rows();
    const RingPtr& ring = A.ring();
    if (n == 0) return Poly(ring, Rational(1));
    // dets[mask] = det of rows 0..popcount(mask)-1 on the column set `mask`
    std::vector<Poly> dets(std::size_t(1) << n, Poly(ring));
    dets[0] = Poly(ring, Rational(1));
    for (std::size_t mask = 1; mask < dets.size(); ++mask) {
        std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::size_t row = k - 1;  // expand along the last row of the submatrix
        Poly sum(ring);
        std::size_t p = 0;  // 0-based column position within the mask
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::size_t(1) << j))) continue;
            if (!A.at(row, j).is_zero()) {
                Poly term = A.at(row, j) * dets[mask ^ (std::size_t(1) << j)];
                sum += ((row + p) % 2 == 0) ? term : -term;
            }
            ++p;
        }
        dets[mask] = std::move(sum);
    }
    return dets[dets.size() - 1];
}

Poly determinant_bareiss(const PolyMatrix& A) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = A.rows();
    const RingPtr& ring = A.ring();
    if (n == 0) return Poly(ring, Rational(1));
    PolyMatrix m = A;
    Poly prev(ring, Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k).is_zero()) ++piv;
        if (piv == n) return Poly(ring);  // zero column: singular
        if (piv != k) {
            m.swap_rows(piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_divide(num, prev);
            }
            m.at(i, k) = Poly(ring);
        }
        prev = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

Poly determinant(const PolyMatrix& A) {
    return A.rows() <= 5 ? determinant_cofactor(A) : determinant_bareiss(A);
}

std::size_t generic_rank(const PolyMatrix& A) {
    PolyMatrix m = A;
    const RingPtr& ring = A.ring();
    const std::size_t rows = m.rows(), cols = m.cols();
    Poly prev(ring, Rational(1));
    std::size_t r = 0;
    while (r < rows && r < cols) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = r; i < rows && pi == rows; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (!m.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        m.swap_rows(pi, r);
        m.swap_cols(pj, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j) {
                Poly num = m.at(i, j) * m.at(r, r) - m.at(i, r) * m.at(r, j);
                m.at(i, j) = exact_divide(num, prev);
            }
            m.at(i, r) = Poly(ring);
        }
        prev = m.at(r, r);
        ++r;
    }
    return r;
}

Ideal determinantal_ideal(const PolyMatrix& B, std::size_t r) {
    if (r < 1 || r > std::min(B.rows(), B.cols()))
        throw std::out_of_range("determinantal_ideal: order out of range");
    std::vector<Poly> gens;
    std::set<std::string> seen;
    std::vector<std::size_t> ri(r), ci(r);
    auto iterate = [&](auto&& self, std::vector<std::size_t>& idx, std::size_t pos,
                       std::size_t start, std::size_t limit,
                       const auto& fn) -> void {
        if (pos == r) {
            fn();
            return;
        }
        for (std::size_t v = start; v + (r - pos) <= limit + 1 && v <= limit; ++v) {
            idx[pos] = v;
            self(self, idx, pos + 1, v + 1, limit, fn);
        }
    };
    iterate(iterate, ri, 0, 0, B.rows() - 1, [&] {
        iterate(iterate, ci, 0, 0, B.cols() - 1, [&] {
            Poly d = determinant(B.submatrix(ri, ci));
            if (d.is_zero()) return;
            d = d.monic();
            if (seen.insert(d.str()).second) gens.push_back(std::move(d));
        });
    });
    return Ideal{B.ring(), std::move(gens)};
}

std::size_t count_distinct_minors(const PolyMatrix& B, std::size_t r) {
    return determinantal_ideal(B, r).gens.size();
}

std::size_t rank_at_point(const PolyMatrix& A, const std::vector<AlgNum>& point) {
    if (point.size() != A.ring()->nvars())
        throw std::invalid_argument("rank_at_point: point arity mismatch");
    ScalarMatrix<AlgNum> m(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            m.at(i, j) = A.at(i, j).eval(point);
    return rcf_over_field(std::move(m)).second;
}

BlockSplit split_unit_block(const PolyMatrix& canonical) {
    BlockSplit out;
    std::vector<bool> unit_row(canonical.rows(), false);
    std::vector<bool> unit_col(canonical.cols(), false);
    for (std::size_t i = 0; i < canonical.rows(); ++i) {
        for (std::size_t j = 0; j < canonical.cols(); ++j) {
            if (canonical.at(i, j).is_zero()) continue;
            const Poly& lead = canonical.at(i, j);
            if (lead.is_nonzero_scalar() && lead.constant_value().is_one()) {
                unit_row[i] = true;
                unit_col[j] = true;
                ++out.units;
            }
            break;
        }
    }
    for (std::size_t i = 0; i < canonical.rows(); ++i)
        if (!unit_row[i]) out.block_rows.push_back(i);
    for (std::size_t j = 0; j < canonical.cols(); ++j)
        if (!unit_col[j]) out.block_cols.push_back(j);
    out.block = canonical.submatrix(out.block_rows, out.block_cols);
    return out;
}

PolyMatrix diag_identity_block(const RingPtr& ring, std::size_t r,
                               const PolyMatrix& B) {
    PolyMatrix m(ring, r + B.rows(), r + B.cols());
    for (std::size_t i = 0; i < r; ++i) m.at(i, i) = Poly(ring, Rational(1));
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) m.at(r + i, r + j) = B.at(i, j);
    return m;
}

}  // namespace quadop
