#include "hermitecx/rational.hpp"

namespace hermitecx {

Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(long n, long k) {
    if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace hermitecx
