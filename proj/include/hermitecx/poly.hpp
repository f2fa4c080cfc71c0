#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hermitecx/field.hpp"

namespace hermitecx {

/// The fixed variable alphabet. Conjugation pairs z<->zbar, w<->wbar,
/// u<->ubar, v<->vbar; x, y, t are self-paired.
enum class VarId : std::uint8_t {
    z, zbar, w, wbar, u, ubar, v, vbar, x, y, t
};

inline constexpr int kNumVars = 11;

VarId conj_partner(VarId v);
const char* var_name(VarId v);
/// LaTeX form, e.g. zbar -> "\bar{z}".
const char* var_latex(VarId v);
std::optional<VarId> var_from_name(const std::string& name);

/// Exponent vector over the fixed alphabet. Ordering is lexicographic in
/// the declared variable order, which fixes rendering and summation order.
struct Monomial {
    std::array<std::uint16_t, kNumVars> exps{};

    int exp(VarId v) const { return exps[static_cast<int>(v)]; }
    void set_exp(VarId v, int e) { exps[static_cast<int>(v)] = static_cast<std::uint16_t>(e); }
    int total_degree() const {
        int d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool is_constant() const { return total_degree() == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse multivariate polynomial over Q(i,sqrt2). No zero coefficients are
/// stored; the zero polynomial is the empty map and equality is structural.
class Poly {
public:
    using TermMap = std::map<Monomial, FieldElem>;

    Poly() = default;
    explicit Poly(const FieldElem& c) { add_term(Monomial{}, c); }
    Poly(long n) : Poly(FieldElem(n)) {}

    static Poly var(VarId v, int exp = 1) {
        Monomial m;
        m.set_exp(v, exp);
        Poly p;
        p.add_term(m, FieldElem(1));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // -1 for the zero polynomial

    /// Coefficient of the given monomial (zero if absent).
    FieldElem coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const FieldElem& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly f, const Poly& g) { return f += g; }
    friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
    friend Poly operator*(const Poly& f, const Poly& g);
    friend bool operator==(const Poly& f, const Poly& g) { return f.terms_ == g.terms_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    /// Canonical text rendering, terms in descending lexicographic order.
    std::string str() const;
    std::string latex() const;

private:
    TermMap terms_;
};

Poly scale(const FieldElem& c, const Poly& f);
Poly pow(const Poly& f, long n);

/// Formal partial derivative; z and zbar are independent variables.
Poly partial(VarId v, const Poly& f);

/// Simultaneous substitution: a ring homomorphism on the bound variables.
Poly substitute(const Poly& f, const std::map<VarId, Poly>& bindings);

/// Swaps every variable with its conjugation partner and conjugates all
/// coefficients. An involutive ring automorphism.
Poly conjugate(const Poly& f);

/// Drops all monomials of total degree greater than cap.
Poly truncate_degree(const Poly& f, int cap);

/// Numeric evaluation; every variable occurring in f must be assigned.
/// Summation follows the ascending lexicographic monomial order.
std::complex<double> eval_complex(const Poly& f,
                                  const std::map<VarId, std::complex<double>>& assignment);

}  // namespace hermitecx
