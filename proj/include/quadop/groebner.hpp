#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadop/poly.hpp"

namespace quadop {

struct Ideal {
    RingPtr ring;
    std::vector<Poly> gens;  // nonzero, shared ring
};

inline Ideal make_ideal(const RingPtr& ring, std::vector<Poly> gens) {
    Ideal id{ring, {}};
    for (auto& g : gens) {
        require_same_ring(ring, g.ring());
        if (!g.is_zero()) id.gens.push_back(std::move(g));
    }
    return id;
}

// Reduced Groebner basis: monic elements, no term of any element divisible by
// the leading monomial of another, sorted ascending by leading monomial.
struct GBasis {
    RingPtr ring;
    std::vector<Poly> elems;

    bool is_unit_ideal() const {
        return elems.size() == 1 && elems[0].is_nonzero_scalar();
    }
};

// S-polynomial w.r.t. leading terms; cancels the leading monomials.
Poly s_polynomial(const Poly& f, const Poly& g);

// Full normal form of f modulo the given polynomials: no term of the result is
// divisible by any of their leading monomials, and f - reduce(f, G) lies in
// the ideal they generate.
Poly reduce(const Poly& f, const std::vector<Poly>& basis);
inline Poly reduce(const Poly& f, const GBasis& G) { return reduce(f, G.elems); }

// Buchberger's algorithm with normal pair selection (smallest lcm first) and
// the coprime-leading-term criterion; aborts via std::runtime_error once more
// than pair_guard pairs have been generated.
GBasis buchberger(const Ideal& I, std::size_t pair_guard = 100000);

// True iff for each ring variable some element's leading monomial is a pure
// power of it (or the basis is the unit ideal, whose zero set is empty).
bool is_zero_dimensional(const GBasis& G);

bool ideal_membership(const Poly& f, const GBasis& G);
bool ideal_membership(const Poly& f, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);

struct Variety {
    std::vector<std::vector<AlgNum>> points;  // discovery order
    std::vector<std::string> unresolved;      // triangular factors not split in Q(w)
    bool positive_dimensional = false;

    bool complete() const { return unresolved.empty() && !positive_dimensional; }
};

// Solves a zero-dimensional ideal over Q(w): lexicographic elimination (last
// ring variable most significant, so the first variable is eliminated to a
// univariate), back-substitution, rational-root search plus quadratic
// splitting in Q(w). Roots at each branch are emitted rationals first in
// descending order, then conjugate pairs. Throws std::domain_error on
// positive-dimensional input.
Variety solve_zero_dim(const Ideal& I, std::size_t pair_guard = 100000);

// Test helper: every S-polynomial of basis elements reduces to zero.
bool buchberger_confluent(const GBasis& G);

std::string variety_point_str(const std::vector<AlgNum>& point);

}  // namespace quadop
