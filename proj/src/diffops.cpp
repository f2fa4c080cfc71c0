#include "hermitecx/diffops.hpp"

#include <stdexcept>

namespace hermitecx {

Poly raise_z(const Poly& f) {
    return Poly::var(VarId::z) * f - partial(VarId::zbar, f);
}

Poly raise_zbar(const Poly& f) {
    return Poly::var(VarId::zbar) * f - partial(VarId::z, f);
}

Poly raise_pow(RaiseVar which, int n, const Poly& f) {
    if (n < 0) throw std::domain_error("raise_pow: negative power");
    Poly g = f;
    for (int k = 0; k < n; ++k) {
        g = which == RaiseVar::z ? raise_z(g) : raise_zbar(g);
    }
    return g;
}

Poly weighted_partial(int p, int q, const Poly& f, WeightTag tag) {
    if (p < 0 || q < 0) throw std::domain_error("weighted_partial: negative order");
    Poly g = f;
    const Poly zmain = Poly::var(tag.main);
    const Poly zbar = Poly::var(tag.bar);
    for (int k = 0; k < q; ++k) g = partial(tag.main, g) - zbar * g;
    for (int k = 0; k < p; ++k) g = partial(tag.bar, g) - zmain * g;
    return g;
}

Poly real_raise(const Poly& f) {
    for (const auto& [m, c] : f.terms()) {
        for (int i = 0; i < kNumVars; ++i) {
            if (m.exps[i] != 0 && static_cast<VarId>(i) != VarId::x) {
                throw std::domain_error(
                    std::string("real_raise: operand involves variable ") +
                    var_name(static_cast<VarId>(i)));
            }
        }
    }
    return scale(FieldElem(2), Poly::var(VarId::x) * f) - partial(VarId::x, f);
}

}  // namespace hermitecx
