#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hermitecx {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. Backed by GMP; equality is structural.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { normalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) { normalize(); }
    /// Parses "n" or "n/d".
    explicit Rational(const std::string& text) : q_(text) { normalize(); }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& r) { q_ += r.q_; return *this; }
    Rational& operator-=(const Rational& r) { q_ -= r.q_; return *this; }
    Rational& operator*=(const Rational& r) { q_ *= r.q_; return *this; }
    Rational& operator/=(const Rational& r) {
        if (r.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= r.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    double to_double() const { return q_.get_d(); }

    /// "n" when integral, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_str();
    }

private:
    explicit Rational(const mpq_class& q) : q_(q) { normalize(); }
    void normalize() { q_.canonicalize(); }

    mpq_class q_;
};

/// n! as an exact integer Rational. Throws on negative n.
Rational factorial(long n);

/// binom(n, k) for n, k >= 0; zero when k > n.
Rational binomial(long n, long k);

}  // namespace hermitecx
