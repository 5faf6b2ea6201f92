#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "quadop/rational.hpp"

namespace quadop {

// Element c0 + c1*w of Q(w), where w is a primitive 6th root of unity:
// w^2 = w - 1. The conjugate root of x^2 - x + 1 is 1 - w, and w^-1 = 1 - w.
class AlgNum {
public:
    AlgNum() = default;
    AlgNum(Rational c0) : c0_(std::move(c0)) {}  // NOLINT: implicit from rationals
    AlgNum(long n) : c0_(n) {}                   // NOLINT
    AlgNum(Rational c0, Rational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

    static AlgNum alpha() { return AlgNum(Rational(0), Rational(1)); }

    const Rational& c0() const { return c0_; }
    const Rational& c1() const { return c1_; }

    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
    bool is_one() const { return c0_.is_one() && c1_.is_zero(); }
    bool is_rational() const { return c1_.is_zero(); }

    AlgNum conj() const {
        // w |-> 1 - w, the other root of x^2 - x + 1.
        return AlgNum(c0_ + c1_, -c1_);
    }

    AlgNum operator-() const { return AlgNum(-c0_, -c1_); }
    AlgNum& operator+=(const AlgNum& o) { c0_ += o.c0_; c1_ += o.c1_; return *this; }
    AlgNum& operator-=(const AlgNum& o) { c0_ -= o.c0_; c1_ -= o.c1_; return *this; }
    AlgNum& operator*=(const AlgNum& o) {
        // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = w - 1.
        Rational a = c0_, b = c1_, c = o.c0_, d = o.c1_;
        Rational bd = b * d;
        c0_ = a * c - bd;
        c1_ = a * d + b * c + bd;
        return *this;
    }
    AlgNum& operator/=(const AlgNum& o) { return *this *= o.inverse(); }

    friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
    friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
    friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
    friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }

    friend bool operator==(const AlgNum& a, const AlgNum& b) {
        return a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    // Field norm N(a + bw) = (a + bw)(a + b - bw) = a^2 + ab + b^2.
    Rational norm() const { return c0_ * c0_ + c0_ * c1_ + c1_ * c1_; }

    AlgNum inverse() const {
        if (is_zero()) throw std::domain_error("AlgNum: division by zero");
        Rational n = norm();
        AlgNum cj = conj();
        return AlgNum(cj.c0_ / n, cj.c1_ / n);
    }

    AlgNum pow(unsigned k) const {
        AlgNum r(1), base = *this;
        while (k) {
            if (k & 1u) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    // "c0 + c1*w" with zero parts omitted; "0" for zero.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool wrote = false;
        if (!c0_.is_zero()) {
            os << c0_.str();
            wrote = true;
        }
        if (!c1_.is_zero()) {
            if (wrote) os << (c1_.sign() < 0 ? " - " : " + ");
            else if (c1_.sign() < 0) os << "-";
            Rational mag = c1_.abs();
            if (!mag.is_one()) os << mag.str() << "*";
            os << "w";
        }
        return os.str();
    }

private:
    Rational c0_, c1_;
};

// Square root in Q(w), if one exists. Solves (u + v*w)^2 = x exactly:
// u^2 - v^2 = x0 and v(2u + v) = x1.
inline std::optional<AlgNum> algnum_sqrt(const AlgNum& x) {
    if (x.is_zero()) return AlgNum(0);
    const Rational &x0 = x.c0(), &x1 = x.c1();
    Rational s;
    if (x1.is_zero()) {
        if (rational_sqrt(x0, s)) return AlgNum(s);
        // x0 = -3 u^2 gives sqrt = u(1 - 2w) = -u * sqrt(-3).
        Rational u2 = -x0 / Rational(3);
        if (rational_sqrt(u2, s)) return AlgNum(s, Rational(-2) * s);
        return std::nullopt;
    }
    // v^2 is a rational root of 3 t^2 + (4 x0 + 2 x1) t - x1^2.
    Rational b = Rational(4) * x0 + Rational(2) * x1;
    Rational disc = b * b + Rational(12) * x1 * x1;
    Rational sd;
    if (!rational_sqrt(disc, sd)) return std::nullopt;
    for (int pm = 0; pm < 2; ++pm) {
        Rational t = ((pm ? sd : -sd) - b) / Rational(6);
        Rational v;
        if (t.sign() >= 0 && rational_sqrt(t, v) && !v.is_zero()) {
            Rational u = (x1 / v - v) / Rational(2);
            AlgNum cand(u, v);
            if (cand * cand == x) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace quadop
