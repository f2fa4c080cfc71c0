#include "hermitecx/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hermitecx {

VarId conj_partner(VarId v) {
    switch (v) {
        case VarId::z: return VarId::zbar;
        case VarId::zbar: return VarId::z;
        case VarId::w: return VarId::wbar;
        case VarId::wbar: return VarId::w;
        case VarId::u: return VarId::ubar;
        case VarId::ubar: return VarId::u;
        case VarId::v: return VarId::vbar;
        case VarId::vbar: return VarId::v;
        default: return v;  // x, y, t are self-paired
    }
}

const char* var_name(VarId v) {
    static constexpr const char* names[kNumVars] = {
        "z", "zbar", "w", "wbar", "u", "ubar", "v", "vbar", "x", "y", "t"};
    return names[static_cast<int>(v)];
}

const char* var_latex(VarId v) {
    static constexpr const char* names[kNumVars] = {
        "z", "\\bar{z}", "w", "\\bar{w}", "u", "\\bar{u}", "v", "\\bar{v}",
        "x", "y", "t"};
    return names[static_cast<int>(v)];
}

std::optional<VarId> var_from_name(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i) {
        if (name == var_name(static_cast<VarId>(i))) return static_cast<VarId>(i);
    }
    return std::nullopt;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

FieldElem Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem() : it->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
    Poly r;
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            Monomial m = mf;
            for (int i = 0; i < kNumVars; ++i) {
                m.exps[i] = static_cast<std::uint16_t>(m.exps[i] + mg.exps[i]);
            }
            r.add_term(m, cf * cg);
        }
    }
    return r;
}

Poly scale(const FieldElem& c, const Poly& f) {
    if (c.is_zero()) return {};
    Poly r;
    for (const auto& [m, cf] : f.terms()) r.add_term(m, c * cf);
    return r;
}

Poly pow(const Poly& f, long n) {
    if (n < 0) throw std::domain_error("pow: negative exponent");
    Poly acc(1);
    Poly base = f;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Poly partial(VarId v, const Poly& f) {
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        const int e = m.exp(v);
        if (e == 0) continue;
        Monomial d = m;
        d.set_exp(v, e - 1);
        r.add_term(d, Rational(e) * c);
    }
    return r;
}

Poly substitute(const Poly& f, const std::map<VarId, Poly>& bindings) {
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        Poly term(c);
        for (int i = 0; i < kNumVars; ++i) {
            const int e = m.exps[i];
            if (e == 0) continue;
            const VarId v = static_cast<VarId>(i);
            auto it = bindings.find(v);
            term = term * (it != bindings.end() ? pow(it->second, e) : Poly::var(v, e));
        }
        r += term;
    }
    return r;
}

Poly conjugate(const Poly& f) {
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        Monomial cm;
        for (int i = 0; i < kNumVars; ++i) {
            const VarId partner = conj_partner(static_cast<VarId>(i));
            cm.exps[static_cast<int>(partner)] = m.exps[i];
        }
        r.add_term(cm, c.conj());
    }
    return r;
}

Poly truncate_degree(const Poly& f, int cap) {
    Poly r;
    for (const auto& [m, c] : f.terms()) {
        if (m.total_degree() <= cap) r.add_term(m, c);
    }
    return r;
}

std::complex<double> eval_complex(const Poly& f,
                                  const std::map<VarId, std::complex<double>>& assignment) {
    std::array<std::optional<std::complex<double>>, kNumVars> values;
    for (const auto& [v, val] : assignment) values[static_cast<int>(v)] = val;

    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : f.terms()) {
        std::complex<double> term = c.to_complex();
        for (int i = 0; i < kNumVars; ++i) {
            const int e = m.exps[i];
            if (e == 0) continue;
            if (!values[i]) {
                throw std::domain_error(std::string("eval_complex: unassigned variable ") +
                                        var_name(static_cast<VarId>(i)));
            }
            for (int k = 0; k < e; ++k) term *= *values[i];
        }
        sum += term;
    }
    return sum;
}

namespace {

// Shared by str() and latex(). Pure-rational coefficients are prefixed
// without a separator ("2z"); anything with i or sqrt2 parts gets
// parenthesized ("(1 + i)*z") unless it is a single basis multiple.
struct TermRenderer {
    bool tex = false;

    std::string monomial(const Monomial& m) const {
        std::ostringstream out;
        bool first = true;
        for (int i = 0; i < kNumVars; ++i) {
            const int e = m.exps[i];
            if (e == 0) continue;
            if (!first && !tex) out << "*";
            first = false;
            out << (tex ? var_latex(static_cast<VarId>(i)) : var_name(static_cast<VarId>(i)));
            if (e > 1) {
                if (tex) out << "^{" << e << "}";
                else out << "^" << e;
            }
        }
        return out.str();
    }

    // Renders |coeff| * monomial; the sign is handled by the caller.
    std::string term(const FieldElem& mag, const Monomial& m) const {
        const std::string vars = monomial(m);
        const bool pure_rational = mag.is_rational();
        std::string cs;
        if (pure_rational) {
            cs = mag.a().str();
            if (tex && !mag.a().is_integer()) {
                cs = "\\tfrac{" + mag.a().num().get_str() + "}{" + mag.a().den().get_str() + "}";
            }
        } else {
            cs = mag.str();
            if (tex) {
                auto pos = cs.find("sqrt2");
                while (pos != std::string::npos) {
                    cs.replace(pos, 5, "\\sqrt{2}");
                    pos = cs.find("sqrt2", pos + 1);
                }
            }
        }
        if (vars.empty()) return cs;
        if (pure_rational) {
            if (mag.is_one()) return vars;
            return cs + vars;
        }
        // Single basis multiple like "3*i" or "sqrt2" keeps its form;
        // composite coefficients are parenthesized.
        const bool composite = cs.find(" + ") != std::string::npos ||
                               cs.find(" - ") != std::string::npos;
        if (composite) cs = "(" + cs + ")";
        return tex ? cs + vars : cs + "*" + vars;
    }
};

std::string render(const Poly& f, bool tex) {
    if (f.is_zero()) return "0";
    TermRenderer r{tex};
    std::ostringstream out;
    bool first = true;
    // Descending lexicographic order puts leading monomials first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = false;
        FieldElem mag = c;
        if (c.is_rational()) {
            negative = c.a().sign() < 0;
            if (negative) mag = -c;
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << r.term(mag, m);
    }
    return out.str();
}

}  // namespace

std::string Poly::str() const { return render(*this, false); }
std::string Poly::latex() const { return render(*this, true); }

}  // namespace hermitecx
