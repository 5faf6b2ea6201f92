#include <doctest.h>

#include <random>

#include "quadop/groebner.hpp"

using namespace quadop;

namespace {

std::vector<Poly> parse_all(const RingPtr& ring,
                            const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    for (auto& t : texts) out.push_back(parse_poly(ring, t));
    return out;
}

// Row-9 entries of the rank 1 case 1 canonical form.
const std::vector<std::string> kR1C1Entries = {
    "a^3 - a*b",   "a^2*b - a*c", "a^2*c + a^2", "a*b^2 - b*c", "b^3 + a*b",
    "b^2*c + b^2", "a*c^2 + a*c", "b*c^2 + b*c", "c^3 + c^2"};

// Its deglex Groebner basis as printed.
const std::vector<std::string> kR1C1GB = {
    "b^2 - a*c",   "b*c + a^2",   "a^3 - a*b", "a^2*b - a*c",
    "a^2*c + a^2", "a*c^2 + a*c", "c^3 + c^2"};

std::mt19937_64 rng(4242);

Poly random_poly(const RingPtr& ring) {
    std::uniform_int_distribution<int> coef(-4, 4), ex(0, 2), nt(1, 4);
    std::vector<Poly::Term> ts;
    int n = nt(rng);
    for (int t = 0; t < n; ++t) {
        Mono m;
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            m.e[i] = static_cast<std::uint8_t>(ex(rng));
        ts.emplace_back(m, Rational(coef(rng)));
    }
    return Poly::from_terms(ring, std::move(ts));
}

}  // namespace

TEST_CASE("s_polynomial basics") {
    auto ring = make_ring("ab");
    Poly a = Poly::variable(ring, 'a'), b = Poly::variable(ring, 'b');
    // coprime single-term leading monomials cancel completely
    CHECK(s_polynomial(a, b).is_zero());
    CHECK_THROWS_AS(s_polynomial(Poly(ring), a), std::domain_error);
    // pivot entries f, g of the module-GB remark: S = d f - b g
    auto ring4 = make_ring("abcd");
    Poly f = parse_poly(ring4, "a*b*c^2 + a^3*c - a*b*d - a^2*b - a^2");
    Poly g = parse_poly(ring4, "a*c^2*d + a^2*c^2 - a*d^2 - a*b*c - a*c");
    Poly d = Poly::variable(ring4, 'd');
    Poly bb = Poly::variable(ring4, 'b');
    CHECK(s_polynomial(f, g) == d * f - bb * g);
    // with reduced form s + a f = h
    Poly h = parse_poly(ring4,
                        "a^3*c*d + a^4*c + a*b^2*c - 2*a^2*b*d - a^3*b + a*b*c "
                        "- a^2*d - a^3");
    CHECK(s_polynomial(f, g) + Poly::variable(ring4, 'a') * f == h);
}

TEST_CASE("s-polynomial of case 1 basis elements reduces to zero") {
    auto ring = make_ring("abc");
    GBasis G{ring, parse_all(ring, kR1C1GB)};
    Poly s = s_polynomial(parse_poly(ring, "b^2 - c*a"),
                          parse_poly(ring, "c*b + a^2"));
    CHECK(reduce(s, G).is_zero());
}

TEST_CASE("buchberger reproduces the printed rank 1 case 1 basis") {
    auto ring = make_ring("abc");
    GBasis G = buchberger(make_ideal(ring, parse_all(ring, kR1C1Entries)));
    CHECK(G.elems == parse_all(ring, kR1C1GB));
    for (auto& gen : parse_all(ring, kR1C1Entries))
        CHECK(reduce(gen, G).is_zero());
}

TEST_CASE("buchberger collapses to a monomial pair") {
    auto ring = make_ring("ab");
    GBasis G = buchberger(
        make_ideal(ring, parse_all(ring, {"a", "-a^3 + a*b", "-a^2*b", "b",
                                          "a*b", "-a*b^2", "-b^3"})));
    CHECK(G.elems == parse_all(ring, {"a", "b"}));
}

TEST_CASE("buchberger on the remark's column-16 entries") {
    auto ring = make_ring("abcd");
    GBasis G = buchberger(make_ideal(
        ring, parse_all(ring, {"a", "-a*c^2 + b*c", "-a^3 - a*b*c",
                               "-a^2*c - a*c*d", "-c^3 - a*c + c*d"})));
    CHECK(G.elems == parse_all(ring, {"a", "b*c", "c^3 - c*d"}));
}

TEST_CASE("reduce normal forms") {
    auto ring = make_ring("abcd");
    GBasis G{ring, parse_all(ring, {"a", "d"})};
    CHECK(reduce(parse_poly(ring, "a*b*c + d"), G).is_zero());
    auto ring2 = make_ring("abc");
    GBasis G2{ring2, {parse_poly(ring2, "b^2 - c*a")}};
    CHECK(reduce(parse_poly(ring2, "b^2"), G2) == parse_poly(ring2, "c*a"));
    // b^3 + ab is one of the original case 1 generators
    GBasis G3{ring2, parse_all(ring2, kR1C1GB)};
    CHECK(reduce(parse_poly(ring2, "b^3 + a*b"), G3).is_zero());
}

TEST_CASE("is_zero_dimensional") {
    auto ring = make_ring("abc");
    GBasis G = buchberger(make_ideal(ring, parse_all(ring, kR1C1Entries)));
    CHECK(is_zero_dimensional(G));
    auto ring4 = make_ring("abcd");
    GBasis G2 = buchberger(make_ideal(
        ring4, parse_all(ring4, {"a", "d", "b*c", "c^2", "b^3 + b^2"})));
    CHECK(is_zero_dimensional(G2));
    auto ring2 = make_ring("ab");
    GBasis G3 = buchberger(make_ideal(ring2, {parse_poly(ring2, "a")}));
    CHECK_FALSE(is_zero_dimensional(G3));
    // the unit ideal has an empty (finite) zero set
    GBasis G4 = buchberger(make_ideal(ring2, parse_all(ring2, {"a", "a + 1"})));
    CHECK(G4.is_unit_ideal());
    CHECK(is_zero_dimensional(G4));
}

TEST_CASE("solve_zero_dim on the rank 1 case 1 condition ideal") {
    auto ring = make_ring("abc");
    Variety v = solve_zero_dim(make_ideal(ring, parse_all(ring, kR1C1Entries)));
    REQUIRE(v.points.size() == 5);
    CHECK(v.complete());
    AlgNum w = AlgNum::alpha();
    std::vector<std::vector<AlgNum>> expected = {
        {0, 0, 0},
        {0, 0, -1},
        {-1, 1, -1},
        {w, w * w, AlgNum(-1)},
        {AlgNum(1) - w, (AlgNum(1) - w) * (AlgNum(1) - w), AlgNum(-1)}};
    CHECK(v.points == expected);  // discovery order matches the paper's list
}

TEST_CASE("solve_zero_dim basics and errors") {
    auto ring = make_ring("ab");
    Variety v = solve_zero_dim(make_ideal(ring, parse_all(ring, {"a", "b"})));
    CHECK(v.points == std::vector<std::vector<AlgNum>>{{0, 0}});
    CHECK_THROWS_AS(solve_zero_dim(make_ideal(ring, {parse_poly(ring, "a")})),
                    std::domain_error);
    CHECK(solve_zero_dim(make_ideal(ring, parse_all(ring, {"a", "a + 1"})))
              .points.empty());
}

TEST_CASE("solve_zero_dim on the rank 2 case 4 determinantal ideal") {
    auto ring = make_ring("ab");
    Variety v = solve_zero_dim(make_ideal(
        ring, parse_all(ring, {"a^4 + a^2*b", "a^3*b + a*b^2", "a*b^3 + a^2*b",
                               "b^4 + a*b^2"})));
    AlgNum w = AlgNum::alpha();
    std::vector<std::vector<AlgNum>> expected = {
        {0, 0}, {-1, -1}, {w, AlgNum(1) - w}, {AlgNum(1) - w, w}};
    CHECK(v.points == expected);
    for (auto& p : v.points)
        CHECK(parse_poly(ring, "b^4 + a*b^2").eval(p).is_zero());
}

TEST_CASE("ideal membership and equality") {
    auto ring = make_ring("ab");
    Ideal I = make_ideal(ring, {parse_poly(ring, "b")});
    CHECK_FALSE(ideal_membership(parse_poly(ring, "a"), I));
    CHECK(ideal_membership(parse_poly(ring, "a*b + b^2"), I));
    Ideal J = make_ideal(ring, parse_all(ring, {"-b", "2*b"}));
    CHECK(ideal_equal(I, J));
    CHECK_FALSE(ideal_equal(I, make_ideal(ring, {parse_poly(ring, "a")})));
    // sign-flipped generating sets give the same ideal
    auto ring3 = make_ring("abc");
    Ideal K1 = make_ideal(ring3, parse_all(ring3, kR1C1Entries));
    std::vector<Poly> negated;
    for (auto& g : parse_all(ring3, kR1C1Entries)) negated.push_back(-g);
    CHECK(ideal_equal(K1, make_ideal(ring3, std::move(negated))));
}

TEST_CASE("pair guard aborts runaway computations") {
    auto ring = make_ring("abc");
    CHECK_THROWS_AS(
        buchberger(make_ideal(ring, parse_all(ring, kR1C1Entries)), 2),
        std::runtime_error);
}

TEST_CASE("buchberger confluence and idempotence on random ideals") {
    auto ring = make_ring("abc");
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Poly> gens;
        for (int i = 0; i < 3; ++i) {
            Poly p = random_poly(ring);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        GBasis G = buchberger(make_ideal(ring, gens));
        CHECK(buchberger_confluent(G));
        GBasis G2 = buchberger(make_ideal(ring, G.elems));
        CHECK(G.elems == G2.elems);
        for (auto& g : gens) CHECK(reduce(g, G).is_zero());
    }
}

TEST_CASE("family membership by symbolic substitution") {
    // substituting a parametrized point into a polynomial of its vanishing
    // ideal yields the zero polynomial in the remaining parameter
    auto ring = make_ring("abcd");
    Poly gen = parse_poly(ring, "a*d + b^2*d + b*d");  // vanishes on (0,-1,0,d)
    APoly sub = gen.substitute({{0, AlgNum(0)}, {1, AlgNum(-1)}, {2, AlgNum(0)}});
    CHECK(sub.is_zero());
}
