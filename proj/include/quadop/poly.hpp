#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quadop/algnum.hpp"
#include "quadop/rational.hpp"

namespace quadop {

// Monomial orders. degrevlex: total degree first, ties broken by reverse
// lexicographic comparison with the variable list read as smallest-first
// (the smallest variable's larger exponent makes the monomial smaller).
// lex: plain lexicographic with the LAST ring variable most significant,
// so a lex Groebner basis contains a univariate polynomial in the first
// (smallest) variable.
enum class MonoOrder { degrevlex, lex };

struct PolyRing {
    std::vector<char> vars;  // ordered subset of {a, b, c, d}, smallest first
    MonoOrder order = MonoOrder::degrevlex;

    std::size_t nvars() const { return vars.size(); }
    int var_index(char v) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == v) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const PolyRing& o) const {
        return vars == o.vars && order == o.order;
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(const std::string& vars,
                         MonoOrder order = MonoOrder::degrevlex) {
    auto r = std::make_shared<PolyRing>();
    r->vars.assign(vars.begin(), vars.end());
    r->order = order;
    return r;
}

inline void require_same_ring(const RingPtr& r1, const RingPtr& r2) {
    if (r1.get() == r2.get()) return;
    if (!r1 || !r2 || !(*r1 == *r2))
        throw std::invalid_argument("operation on mismatched polynomial rings");
}

constexpr std::size_t kMaxVars = 4;

struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};

    unsigned deg() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const { return deg() == 0; }
    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator!=(const Mono& o) const { return e != o.e; }

    static Mono one() { return Mono{}; }
    static Mono var(int i, unsigned k = 1) {
        Mono m;
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k);
        return m;
    }

    Mono operator*(const Mono& o) const {
        Mono r;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
        return r;
    }
    bool divides(const Mono& o) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // Quotient o / this; caller checks divisibility.
    Mono quotient_of(const Mono& o) const {
        Mono r;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
        return r;
    }
    static Mono lcm(const Mono& x, const Mono& y) {
        Mono r;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            r.e[i] = std::max(x.e[i], y.e[i]);
        return r;
    }
    bool coprime(const Mono& o) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    // Is this a pure power of variable i (exponent > 0, all others 0)?
    bool pure_power_of(std::size_t i) const {
        if (e[i] == 0) return false;
        for (std::size_t j = 0; j < kMaxVars; ++j)
            if (j != i && e[j]) return false;
        return true;
    }
};

// Returns <0, 0, >0 for m1 < m2, m1 == m2, m1 > m2 under the ring order.
inline int mono_compare(const PolyRing& ring, const Mono& m1, const Mono& m2) {
    const std::size_t n = ring.nvars();
    if (ring.order == MonoOrder::degrevlex) {
        unsigned d1 = m1.deg(), d2 = m2.deg();
        if (d1 != d2) return d1 < d2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (m1.e[i] != m2.e[i]) return m1.e[i] < m2.e[i] ? 1 : -1;
        }
        return 0;
    }
    // lex, last variable most significant
    for (std::size_t i = n; i-- > 0;) {
        if (m1.e[i] != m2.e[i]) return m1.e[i] < m2.e[i] ? -1 : 1;
    }
    return 0;
}

inline int mono_compare(const RingPtr& r1, const Mono& m1, const RingPtr& r2,
                        const Mono& m2) {
    require_same_ring(r1, r2);
    return mono_compare(*r1, m1, m2);
}

inline std::string mono_str(const PolyRing& ring, const Mono& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!first) os << "*";
        os << ring.vars[i];
        if (m.e[i] > 1) os << "^" << static_cast<int>(m.e[i]);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

// Sparse polynomial with coefficients in K (Rational or AlgNum), terms kept
// sorted strictly descending in the ring's monomial order, no zero
// coefficients stored.
template <class K>
class BasicPoly {
public:
    using Term = std::pair<Mono, K>;

    BasicPoly() = default;
    explicit BasicPoly(RingPtr ring) : ring_(std::move(ring)) {}
    BasicPoly(RingPtr ring, const K& c) : ring_(std::move(ring)) {
        if (!c.is_zero()) terms_.emplace_back(Mono::one(), c);
    }
    BasicPoly(RingPtr ring, const Mono& m, const K& c) : ring_(std::move(ring)) {
        if (!c.is_zero()) terms_.emplace_back(m, c);
    }
    static BasicPoly from_terms(RingPtr ring, std::vector<Term> terms) {
        BasicPoly p(std::move(ring));
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }
    static BasicPoly variable(const RingPtr& ring, char v, unsigned k = 1) {
        int i = ring->var_index(v);
        if (i < 0) throw std::invalid_argument("variable not in ring");
        return BasicPoly(ring, Mono::var(i, k), K(1));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }
    // Nonzero element of the ground field?
    bool is_nonzero_scalar() const {
        return terms_.size() == 1 && terms_[0].first.is_one();
    }
    K constant_value() const {
        return terms_.empty() ? K(0) : terms_[0].second;
    }

    const Term& leading() const {
        if (terms_.empty())
            throw std::domain_error("leading term of zero polynomial");
        return terms_[0];
    }
    const Mono& leading_mono() const { return leading().first; }
    const K& leading_coeff() const { return leading().second; }
    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& t : terms_) d = std::max(d, t.first.deg());
        return d;
    }

    BasicPoly operator-() const {
        BasicPoly r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend BasicPoly operator+(const BasicPoly& f, const BasicPoly& g) {
        return merge(f, g, false);
    }
    friend BasicPoly operator-(const BasicPoly& f, const BasicPoly& g) {
        return merge(f, g, true);
    }
    BasicPoly& operator+=(const BasicPoly& g) { return *this = *this + g; }
    BasicPoly& operator-=(const BasicPoly& g) { return *this = *this - g; }

    friend BasicPoly operator*(const BasicPoly& f, const BasicPoly& g) {
        require_same_ring(f.ring_, g.ring_);
        BasicPoly r(f.ring_);
        if (f.is_zero() || g.is_zero()) return r;
        std::vector<Term> acc;
        acc.reserve(f.terms_.size() * g.terms_.size());
        for (auto& tf : f.terms_)
            for (auto& tg : g.terms_)
                acc.emplace_back(tf.first * tg.first, tf.second * tg.second);
        r.terms_ = std::move(acc);
        r.normalize();
        return r;
    }
    BasicPoly& operator*=(const BasicPoly& g) { return *this = *this * g; }

    BasicPoly scaled(const K& c) const {
        BasicPoly r(ring_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second * c;
        return r;
    }
    // this * c * m
    BasicPoly times_term(const Mono& m, const K& c) const {
        BasicPoly r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
        return r;
    }

    BasicPoly monic() const {
        if (is_zero()) return *this;
        return scaled(K(1) / leading_coeff());
    }

    friend bool operator==(const BasicPoly& f, const BasicPoly& g) {
        return f.terms_ == g.terms_;
    }
    friend bool operator!=(const BasicPoly& f, const BasicPoly& g) {
        return !(f == g);
    }

    K coeff(const Mono& m) const {
        for (auto& t : terms_)
            if (t.first == m) return t.second;
        return K(0);
    }

    AlgNum eval(const std::vector<AlgNum>& point) const {
        if (point.size() != ring_->nvars())
            throw std::invalid_argument("eval: point arity mismatch");
        AlgNum sum(0);
        for (auto& t : terms_) {
            AlgNum v = to_algnum(t.second);
            for (std::size_t i = 0; i < ring_->nvars(); ++i)
                if (t.first.e[i]) v *= point[i].pow(t.first.e[i]);
            sum += v;
        }
        return sum;
    }

    // Substitutes values for a subset of variables (by ring index); the result
    // lives in the same ring with those exponents cleared.
    BasicPoly<AlgNum> substitute(const std::map<int, AlgNum>& vals) const {
        std::vector<std::pair<Mono, AlgNum>> acc;
        acc.reserve(terms_.size());
        for (auto& t : terms_) {
            AlgNum c = to_algnum(t.second);
            Mono m = t.first;
            for (auto& [i, v] : vals) {
                auto idx = static_cast<std::size_t>(i);
                if (m.e[idx]) {
                    c *= v.pow(m.e[idx]);
                    m.e[idx] = 0;
                }
            }
            acc.emplace_back(m, c);
        }
        return BasicPoly<AlgNum>::from_terms(ring_, std::move(acc));
    }

    // Same variables, different active order.
    BasicPoly converted(const RingPtr& target) const {
        if (!ring_ || !target || ring_->vars != target->vars)
            throw std::invalid_argument("converted: variable mismatch");
        BasicPoly r(target);
        r.terms_ = terms_;
        r.normalize();
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& t : terms_) {
            std::string cs = coeff_str(t.second);
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            bool unit = mag == "1";
            if (t.first.is_one()) {
                os << mag;
            } else {
                if (!unit) os << mag << "*";
                os << mono_str(*ring_, t.first);
            }
            first = false;
        }
        return os.str();
    }

private:
    static AlgNum to_algnum(const Rational& r) { return AlgNum(r); }
    static AlgNum to_algnum(const AlgNum& a) { return a; }
    static std::string coeff_str(const Rational& r) { return r.str(); }
    static std::string coeff_str(const AlgNum& a) {
        std::string s = a.str();
        if (s.find(' ') != std::string::npos) return "(" + s + ")";
        return s;
    }

    static BasicPoly merge(const BasicPoly& f, const BasicPoly& g, bool sub) {
        require_same_ring(f.ring_, g.ring_);
        BasicPoly r(f.ring_);
        r.terms_.reserve(f.terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        const auto& ring = *f.ring_;
        while (i < f.terms_.size() && j < g.terms_.size()) {
            int c = mono_compare(ring, f.terms_[i].first, g.terms_[j].first);
            if (c > 0) {
                r.terms_.push_back(f.terms_[i++]);
            } else if (c < 0) {
                auto t = g.terms_[j++];
                if (sub) t.second = -t.second;
                r.terms_.push_back(std::move(t));
            } else {
                K coef = sub ? K(f.terms_[i].second - g.terms_[j].second)
                             : K(f.terms_[i].second + g.terms_[j].second);
                if (!coef.is_zero()) r.terms_.emplace_back(f.terms_[i].first, coef);
                ++i, ++j;
            }
        }
        for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
        for (; j < g.terms_.size(); ++j) {
            auto t = g.terms_[j];
            if (sub) t.second = -t.second;
            r.terms_.push_back(std::move(t));
        }
        return r;
    }

    void normalize() {
        const auto& ring = *ring_;
        std::sort(terms_.begin(), terms_.end(),
                  [&ring](const Term& x, const Term& y) {
                      return mono_compare(ring, x.first, y.first) > 0;
                  });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second = out.back().second + t.second;
            else
                out.push_back(t);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Term& t) { return t.second.is_zero(); }),
                  out.end());
        terms_ = std::move(out);
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

using Poly = BasicPoly<Rational>;
using APoly = BasicPoly<AlgNum>;

// Exact division f / g in the polynomial ring; throws if g does not divide f.
inline Poly exact_divide(const Poly& f, const Poly& g) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw std::domain_error("exact_divide: division by zero");
    Poly rem = f, quot(f.ring());
    while (!rem.is_zero()) {
        const auto& lt = rem.leading();
        if (!g.leading_mono().divides(lt.first))
            throw std::domain_error("exact_divide: not divisible");
        Mono qm = g.leading_mono().quotient_of(lt.first);
        Rational qc = lt.second / g.leading_coeff();
        quot += Poly(f.ring(), qm, qc);
        rem -= g.times_term(qm, qc);
    }
    return quot;
}

Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace quadop
