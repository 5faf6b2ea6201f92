#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadop {

// Exact rational scalar. Stored canonically: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        q.canonicalize();
        return Rational(std::move(q));
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // "p/q", or "p" when q = 1.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

// Exact square root of a non-negative rational, if it is a perfect square.
inline bool rational_sqrt(const Rational& x, Rational& out) {
    if (x.sign() < 0) return false;
    if (x.is_zero()) { out = Rational(0); return true; }
    mpz_class n = x.num(), d = x.den();
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (rn * rn != n || rd * rd != d) return false;
    out = Rational(mpq_class(rn, rd));
    return true;
}

}  // namespace quadop
