#include "quadop/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quadop {

Poly s_polynomial(const Poly& f, const Poly& g) {
    require_same_ring(f.ring(), g.ring());
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("s_polynomial: zero input");
    Mono l = Mono::lcm(f.leading_mono(), g.leading_mono());
    Poly lhs = f.times_term(f.leading_mono().quotient_of(l),
                            f.leading_coeff().inverse());
    Poly rhs = g.times_term(g.leading_mono().quotient_of(l),
                            g.leading_coeff().inverse());
    return lhs - rhs;
}

Poly reduce(const Poly& f, const std::vector<Poly>& basis) {
    Poly rest = f;
    Poly result(f.ring());
    while (!rest.is_zero()) {
        const auto& lt = rest.leading();
        bool stepped = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_mono().divides(lt.first)) {
                rest -= g.times_term(g.leading_mono().quotient_of(lt.first),
                                     lt.second / g.leading_coeff());
                stepped = true;
                break;
            }
        }
        if (!stepped) {
            result += Poly(f.ring(), lt.first, lt.second);
            rest -= Poly(f.ring(), lt.first, lt.second);
        }
    }
    return result;
}

namespace {

// Inter-reduce to the canonical reduced basis: monic, fully tail-reduced,
// leading monomials mutually non-dividing, sorted ascending.
std::vector<Poly> autoreduce(std::vector<Poly> g) {
    g.erase(std::remove_if(g.begin(), g.end(),
                           [](const Poly& p) { return p.is_zero(); }),
            g.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<Poly> others;
            others.reserve(g.size() - 1);
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) others.push_back(g[j]);
            Poly h = reduce(g[i], others);
            if (h != g[i]) {
                changed = true;
                if (h.is_zero()) {
                    g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    g[i] = std::move(h);
                }
            }
        }
    }
    for (auto& p : g) p = p.monic();
    if (!g.empty()) {
        const auto& ring = *g[0].ring();
        std::sort(g.begin(), g.end(), [&](const Poly& x, const Poly& y) {
            return mono_compare(ring, x.leading_mono(), y.leading_mono()) < 0;
        });
    }
    return g;
}

}  // namespace

GBasis buchberger(const Ideal& I, std::size_t pair_guard) {
    if (I.gens.empty())
        throw std::invalid_argument("buchberger: empty generator list");
    std::vector<Poly> g = autoreduce(I.gens);
    if (g.empty()) throw std::invalid_argument("buchberger: zero ideal");
    const auto& ring = *I.ring;

    struct Pair {
        std::size_t i, j;
        Mono lcm;
    };
    std::vector<Pair> pairs;
    std::size_t generated = 0;
    auto add_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (g[i].leading_mono().coprime(g[k].leading_mono())) continue;
            pairs.push_back({i, k, Mono::lcm(g[i].leading_mono(),
                                             g[k].leading_mono())});
            if (++generated > pair_guard)
                throw std::runtime_error("buchberger: pair guard exceeded");
        }
    };
    for (std::size_t k = 1; k < g.size(); ++k) add_pairs_for(k);

    while (!pairs.empty()) {
        // normal selection: smallest lcm in the active order
        std::size_t best = 0;
        for (std::size_t p = 1; p < pairs.size(); ++p)
            if (mono_compare(ring, pairs[p].lcm, pairs[best].lcm) < 0) best = p;
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        Poly s = reduce(s_polynomial(g[pr.i], g[pr.j]), g);
        if (!s.is_zero()) {
            g.push_back(s.monic());
            add_pairs_for(g.size() - 1);
        }
    }
    GBasis result{I.ring, autoreduce(std::move(g))};
    return result;
}

bool is_zero_dimensional(const GBasis& G) {
    if (G.is_unit_ideal()) return true;  // empty zero set
    const std::size_t n = G.ring->nvars();
    for (std::size_t i = 0; i < n; ++i) {
        bool covered = false;
        for (const auto& e : G.elems)
            if (e.leading_mono().pure_power_of(i)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool ideal_membership(const Poly& f, const GBasis& G) {
    return reduce(f, G).is_zero();
}

bool ideal_membership(const Poly& f, const Ideal& I) {
    return ideal_membership(f, buchberger(I));
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    GBasis gi = buchberger(I), gj = buchberger(J);
    // reduced bases are unique per order
    return gi.elems == gj.elems;
}

bool buchberger_confluent(const GBasis& G) {
    for (std::size_t i = 0; i < G.elems.size(); ++i)
        for (std::size_t j = i + 1; j < G.elems.size(); ++j)
            if (!reduce(s_polynomial(G.elems[i], G.elems[j]), G).is_zero())
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Zero-dimensional solving over Q(w)
// ---------------------------------------------------------------------------

namespace {

// Dense univariate over Q(w), coeffs[k] multiplying x^k.
using Dense = std::vector<AlgNum>;

void dense_trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense dense_monic(Dense p) {
    dense_trim(p);
    if (p.empty()) return p;
    AlgNum inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

Dense dense_mod(const Dense& a, const Dense& b) {
    Dense r = a;
    dense_trim(r);
    while (r.size() >= b.size() && !r.empty()) {
        AlgNum q = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] -= q * b[i];
        dense_trim(r);
    }
    return r;
}

Dense dense_gcd(Dense a, Dense b) {
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        Dense r = dense_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return dense_monic(a);
}

// Divides out the root x = r once; caller guarantees p(r) = 0.
Dense deflate(const Dense& p, const AlgNum& r) {
    Dense q(p.size() - 1);
    AlgNum carry(0);
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
        carry = q[i - 1];
    }
    return q;
}

AlgNum dense_eval(const Dense& p, const AlgNum& x) {
    AlgNum v(0);
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

bool dense_rational(const Dense& p) {
    for (auto& c : p)
        if (!c.is_rational()) return false;
    return true;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    if (a == 0) return out;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    return out;
}

struct RootResult {
    std::vector<AlgNum> roots;        // distinct
    std::vector<Dense> unresolved;    // leftover factors of degree >= 3 etc.
};

void find_roots(Dense p, RootResult& out) {
    dense_trim(p);
    if (p.size() <= 1) return;  // constant: no roots (nonzero) or all (zero)
    // x = 0 roots
    bool zero_root = false;
    while (p.size() > 1 && p[0].is_zero()) {
        zero_root = true;
        p.erase(p.begin());
    }
    if (zero_root) out.roots.push_back(AlgNum(0));
    if (p.size() <= 1) return;

    if (dense_rational(p)) {
        // rational root candidates p/q: p | constant, q | leading, both taken
        // from the integer-cleared form
        auto integer_coeffs = [](const Dense& q) {
            mpz_class den_lcm = 1;
            for (auto& c : q) {
                mpz_class d = c.c0().den(), g;
                mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
                den_lcm = den_lcm / g * d;
            }
            std::vector<mpz_class> ic(q.size());
            for (std::size_t i = 0; i < q.size(); ++i)
                ic[i] = q[i].c0().num() * (den_lcm / q[i].c0().den());
            return ic;
        };
        std::vector<Rational> found;
        bool progress = true;
        while (progress && p.size() > 1) {
            progress = false;
            auto ic = integer_coeffs(p);
            for (const auto& dp : divisors(ic[0])) {
                for (const auto& dq : divisors(ic.back())) {
                    for (int sgn = 1; sgn >= -1 && !progress; sgn -= 2) {
                        Rational cand(mpq_class(sgn * dp, dq));
                        AlgNum av{cand};
                        if (dense_eval(p, av).is_zero()) {
                            found.push_back(cand);
                            while (p.size() > 1 && dense_eval(p, av).is_zero())
                                p = deflate(p, av);
                            progress = true;
                        }
                    }
                    if (progress) break;
                }
                if (progress) break;
            }
        }
        std::sort(found.begin(), found.end(),
                  [](const Rational& x, const Rational& y) { return y < x; });
        for (auto& r : found) out.roots.push_back(AlgNum(r));
        dense_trim(p);
        if (p.size() <= 1) return;
    }
    if (p.size() == 2) {  // linear
        out.roots.push_back(-(p[0] / p[1]));
        return;
    }
    if (p.size() == 3) {  // quadratic over Q(w)
        AlgNum a = p[2], b = p[1], c = p[0];
        AlgNum disc = b * b - AlgNum(4) * a * c;
        auto sq = algnum_sqrt(disc);
        if (sq) {
            AlgNum two_a = AlgNum(2) * a;
            AlgNum r1 = (-b + *sq) / two_a;
            AlgNum r2 = (-b - *sq) / two_a;
            std::vector<AlgNum> pairroots{r1};
            if (r2 != r1) pairroots.push_back(r2);
            std::sort(pairroots.begin(), pairroots.end(),
                      [](const AlgNum& x, const AlgNum& y) {
                          if (x.c1() != y.c1()) return y.c1() < x.c1();
                          return y.c0() < x.c0();
                      });
            for (auto& r : pairroots) out.roots.push_back(r);
            return;
        }
    }
    out.unresolved.push_back(p);
}

std::string dense_str(const Dense& p, char var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << p[i].str() << ")";
        if (i >= 1) {
            os << "*" << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// Extracts f as dense univariate in ring variable v if it involves only v.
bool as_univariate(const APoly& f, std::size_t v, Dense& out) {
    unsigned maxdeg = 0;
    for (auto& t : f.terms()) {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (i != v && t.first.e[i]) return false;
        maxdeg = std::max(maxdeg, static_cast<unsigned>(t.first.e[v]));
    }
    out.assign(maxdeg + 1, AlgNum(0));
    for (auto& t : f.terms()) out[t.first.e[v]] += t.second;
    return true;
}

void solve_rec(const RingPtr& lexring, std::vector<APoly> polys, std::size_t v,
               std::vector<AlgNum>& prefix, Variety& out) {
    const std::size_t n = lexring->nvars();
    polys.erase(std::remove_if(polys.begin(), polys.end(),
                               [](const APoly& p) { return p.is_zero(); }),
                polys.end());
    for (const auto& p : polys)
        if (p.is_nonzero_scalar()) return;  // inconsistent branch
    if (v == n) {
        if (polys.empty()) out.points.push_back(prefix);
        return;
    }
    Dense g;
    bool have = false;
    for (const auto& p : polys) {
        Dense u;
        if (as_univariate(p, v, u)) {
            g = have ? dense_gcd(g, u) : dense_monic(u);
            have = true;
        }
    }
    if (!have) {
        // no constraint univariate in this variable: not zero-dimensional here
        out.positive_dimensional = true;
        return;
    }
    RootResult rr;
    find_roots(g, rr);
    for (auto& f : rr.unresolved)
        out.unresolved.push_back(dense_str(f, lexring->vars[v]));
    for (const auto& root : rr.roots) {
        std::vector<APoly> next;
        next.reserve(polys.size());
        std::map<int, AlgNum> sub{{static_cast<int>(v), root}};
        for (const auto& p : polys) next.push_back(p.substitute(sub));
        prefix.push_back(root);
        solve_rec(lexring, std::move(next), v + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Variety solve_zero_dim(const Ideal& I, std::size_t pair_guard) {
    GBasis G = buchberger(I, pair_guard);
    if (!is_zero_dimensional(G))
        throw std::domain_error("solve_zero_dim: ideal is not zero-dimensional");
    Variety out;
    if (G.is_unit_ideal()) return out;  // empty zero set

    auto lexring = make_ring(std::string(I.ring->vars.begin(), I.ring->vars.end()),
                             MonoOrder::lex);
    std::vector<Poly> lexgens;
    lexgens.reserve(G.elems.size());
    for (const auto& e : G.elems) lexgens.push_back(e.converted(lexring));
    GBasis Glex = buchberger(Ideal{lexring, std::move(lexgens)}, pair_guard);

    std::vector<APoly> sys;
    sys.reserve(Glex.elems.size());
    for (const auto& e : Glex.elems) sys.push_back(e.substitute({}));
    std::vector<AlgNum> prefix;
    solve_rec(lexring, std::move(sys), 0, prefix, out);

    // every returned point must annihilate every generator
    for (const auto& pt : out.points)
        for (const auto& gen : I.gens)
            if (!gen.eval(pt).is_zero())
                throw std::logic_error("solve_zero_dim: point fails generator");
    return out;
}

std::string variety_point_str(const std::vector<AlgNum>& point) {
    std::string s = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) s += ", ";
        s += point[i].str();
    }
    return s + ")";
}

}  // namespace quadop
