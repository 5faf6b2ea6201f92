#include "quadop/poly.hpp"

#include <cctype>

namespace quadop {
namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

Rational parse_number(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits += c.s[c.i++];
    if (digits.empty()) throw std::invalid_argument("parse_poly: expected number");
    if (c.peek() == '/') {
        c.take();
        std::string den;
        c.skip_ws();
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            den += c.s[c.i++];
        if (den.empty()) throw std::invalid_argument("parse_poly: bad fraction");
        return Rational::parse(digits + "/" + den);
    }
    return Rational::parse(digits);
}

unsigned parse_exponent(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits += c.s[c.i++];
    if (digits.empty()) throw std::invalid_argument("parse_poly: expected exponent");
    return static_cast<unsigned>(std::stoul(digits));
}

}  // namespace

// Canonical text grammar: terms separated by + / -, each term a '*'-joined
// product of an optional rational coefficient and variable powers "a^2".
Poly parse_poly(const RingPtr& ring, const std::string& text) {
    Cursor c{text};
    std::vector<Poly::Term> terms;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            c.take();
            sign = (p == '-') ? -1 : 1;
        } else if (!first) {
            throw std::invalid_argument("parse_poly: expected + or - in '" + text + "'");
        }
        Rational coef(sign);
        Mono m;
        bool expect_factor = true;
        while (expect_factor) {
            char f = c.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coef *= parse_number(c);
            } else if (std::isalpha(static_cast<unsigned char>(f))) {
                c.take();
                int idx = ring->var_index(f);
                if (idx < 0)
                    throw std::invalid_argument(std::string("parse_poly: variable '") +
                                                f + "' not in ring");
                unsigned k = 1;
                if (c.peek() == '^') {
                    c.take();
                    k = parse_exponent(c);
                }
                m.e[static_cast<std::size_t>(idx)] =
                    static_cast<std::uint8_t>(m.e[static_cast<std::size_t>(idx)] + k);
            } else {
                throw std::invalid_argument("parse_poly: unexpected character in '" +
                                            text + "'");
            }
            if (c.peek() == '*') {
                c.take();
            } else {
                expect_factor = false;
            }
        }
        terms.emplace_back(m, coef);
        first = false;
    }
    if (terms.empty()) throw std::invalid_argument("parse_poly: empty input");
    return Poly::from_terms(ring, std::move(terms));
}

}  // namespace quadop
