#include "hermitecx/field.hpp"

#include <sstream>

namespace hermitecx {

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
    // Galois group of Q(i,sqrt2)/Q: sigma1 flips i, sigma2 flips sqrt2.
    const FieldElem s1(a_, -b_, c_, -d_);
    const FieldElem s2(a_, b_, -c_, -d_);
    const FieldElem s3(a_, -b_, -c_, d_);
    const FieldElem cof = s1 * s2 * s3;
    const FieldElem norm = *this * cof;
    if (!norm.is_rational() || norm.a().is_zero())
        throw std::logic_error("FieldElem: field norm must be a nonzero rational");
    const Rational inv_norm = norm.a().inverse();
    return FieldElem(inv_norm * cof.a(), inv_norm * cof.b(),
                     inv_norm * cof.c(), inv_norm * cof.d());
}

FieldElem FieldElem::pow(long n) const {
    FieldElem base = n < 0 ? inverse() : *this;
    long e = n < 0 ? -n : n;
    FieldElem acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

void append_term(std::ostringstream& out, bool& first, const Rational& coeff,
                 const char* basis) {
    if (coeff.is_zero()) return;
    const Rational mag = coeff.abs();
    if (first) {
        if (coeff.sign() < 0) out << "-";
        first = false;
    } else {
        out << (coeff.sign() < 0 ? " - " : " + ");
    }
    if (basis[0] == '\0') {
        out << mag.str();
    } else if (mag.is_one()) {
        out << basis;
    } else {
        out << mag.str() << "*" << basis;
    }
}

}  // namespace

std::string FieldElem::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    append_term(out, first, a_, "");
    append_term(out, first, b_, "i");
    append_term(out, first, c_, "sqrt2");
    append_term(out, first, d_, "i*sqrt2");
    return out.str();
}

}  // namespace hermitecx
