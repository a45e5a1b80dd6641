#pragma once

#include "awshift/ops.hpp"

namespace awshift {

// The basic representation of the double affine Hecke algebra of type
// (C1v, C1) on Laurent polynomials:
//   T0 = tau0 s0 + g0(z)(1 - s0),  g0 = (tau0 - tau0^-1 + (tt0 - tt0^-1) q^{1/2} z^-1)/(1 - q z^-2)
//   T1 = tau1 s1 + g1(z)(1 - s1),  g1 = (tau1 - tau1^-1 + (tt1 - tt1^-1) z)/(1 - z^2)
//   Y  = T0 T1,  L = Y + Y^-1.
// Inverses come from the quadratic relations: T_i^-1 = T_i - tau_i + tau_i^-1.
struct DahaGens {
    ParamSet params;
    DiffReflOp T0, T1, T0inv, T1inv, Z, Zinv, Y, Yinv, L;
};

DiffReflOp build_T0(const ParamSet& p);
DiffReflOp build_T1(const ParamSet& p);
DiffReflOp build_T0inv(const ParamSet& p);
DiffReflOp build_T1inv(const ParamSet& p);
DiffReflOp build_Z(const ParamSet& p);
DiffReflOp build_Zinv(const ParamSet& p);
DiffReflOp build_Y(const ParamSet& p);
DiffReflOp build_Yinv(const ParamSet& p);
DiffReflOp build_L(const ParamSet& p);

DahaGens build_daha(const ParamSet& p);

// L assembled from the c-function product formula (independent route,
// must agree with Y + Y^-1).
DiffReflOp build_L_explicit(const ParamSet& p);

// f_{2,k}(z) = q^{-k'_1} (1-az)(1-bz)(1-cz)(1-dz) / ((1-z^2)(1-q z^2)),
// the T^2 layer of L
RatFunc f2_of_L(const ParamSet& p);

enum class CreationOp { Alpha0, Alpha1 };

// Creation operators applied to a known Y-eigenvector:
//   alpha0 f = T1^-1 Z^-1 f - b0'(q^{1/2} lambda) f
//   alpha1 f = T1 f - b1'(lambda^-1) f
// where lambda is the supplied Y-eigenvalue of f.
LaurentPoly creation_apply(CreationOp which, const DahaGens& g, const LaurentPoly& f,
                           const Scalar& lambda);

} // namespace awshift
