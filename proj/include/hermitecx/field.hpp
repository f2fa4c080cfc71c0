#pragma once

#include <complex>
#include <string>

#include "hermitecx/rational.hpp"

namespace hermitecx {

/// Element of the quartic field Q(i, sqrt2), stored as the coordinate
/// vector (a, b, c, d) over the Q-basis {1, i, sqrt2, i*sqrt2}.
/// Multiplication uses i^2 = -1 and (sqrt2)^2 = 2.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(long n) : a_(n) {}
    FieldElem(const Rational& r) : a_(r) {}
    FieldElem(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static FieldElem i() { return FieldElem(0, 1, 0, 0); }
    static FieldElem sqrt2() { return FieldElem(0, 0, 1, 0); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const {
        return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    bool is_one() const {
        return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    /// True when the element lies in Q.
    bool is_rational() const {
        return b_.is_zero() && c_.is_zero() && d_.is_zero();
    }

    FieldElem operator-() const { return FieldElem(-a_, -b_, -c_, -d_); }

    FieldElem& operator+=(const FieldElem& o) {
        a_ += o.a_; b_ += o.b_; c_ += o.c_; d_ += o.d_;
        return *this;
    }
    FieldElem& operator-=(const FieldElem& o) {
        a_ -= o.a_; b_ -= o.b_; c_ -= o.c_; d_ -= o.d_;
        return *this;
    }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
    friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }

    friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
        const Rational two(2);
        return FieldElem(
            x.a_ * y.a_ - x.b_ * y.b_ + two * (x.c_ * y.c_ - x.d_ * y.d_),
            x.a_ * y.b_ + x.b_ * y.a_ + two * (x.c_ * y.d_ + x.d_ * y.c_),
            x.a_ * y.c_ + x.c_ * y.a_ - x.b_ * y.d_ - x.d_ * y.b_,
            x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_);
    }

    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

    /// Complex conjugation: i -> -i, sqrt2 fixed.
    FieldElem conj() const { return FieldElem(a_, -b_, c_, -d_); }

    /// Multiplicative inverse via the three Galois conjugates; the product
    /// of all four conjugates lands in Q.
    FieldElem inverse() const;

    FieldElem pow(long n) const;

    std::complex<double> to_complex() const {
        const double s = 1.4142135623730950488;
        return {a_.to_double() + s * c_.to_double(),
                b_.to_double() + s * d_.to_double()};
    }

    /// Canonical rendering "a + b*i + c*sqrt2 + d*i*sqrt2", zero terms omitted.
    std::string str() const;

private:
    Rational a_, b_, c_, d_;
};

inline FieldElem operator*(const Rational& r, const FieldElem& x) {
    return FieldElem(r) * x;
}

}  // namespace hermitecx
