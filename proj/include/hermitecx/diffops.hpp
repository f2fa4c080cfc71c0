#pragma once

#include "hermitecx/poly.hpp"

namespace hermitecx {

/// Selects the Gaussian weight exp(-z*zbar) attached to one conjugate
/// variable pair; weighted derivatives are defined relative to a tag.
struct WeightTag {
    VarId main;  // z of the pair
    VarId bar;   // zbar of the pair
};

inline constexpr WeightTag kWeightZ{VarId::z, VarId::zbar};
inline constexpr WeightTag kWeightW{VarId::w, VarId::wbar};

/// (-d/dzbar + z) f
Poly raise_z(const Poly& f);

/// (-d/dz + zbar) f
Poly raise_zbar(const Poly& f);

enum class RaiseVar { z, zbar };

/// n-fold application of the chosen raising operator; n = 0 is identity.
Poly raise_pow(RaiseVar which, int n, const Poly& f);

/// exp(z*zbar) d^p/dzbar^p d^q/dz^q ( exp(-z*zbar) f ) for the tagged pair,
/// computed by iterating the weight-twisted derivations
///   g -> dg/dz - zbar*g   (q times), then
///   g -> dg/dzbar - z*g   (p times),
/// so the weight itself never materializes and the result stays exact.
Poly weighted_partial(int p, int q, const Poly& f, WeightTag tag = kWeightZ);

/// (-D + 2x) f for a polynomial in x alone. Throws when f involves
/// any other variable.
Poly real_raise(const Poly& f);

}  // namespace hermitecx
