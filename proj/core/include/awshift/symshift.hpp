#pragma once

#include <array>
#include <vector>

#include "awshift/families.hpp"
#include "awshift/ops.hpp"

namespace awshift {

// The eight fundamental shift operators.  G+ and G- are the forward and
// backward shift operators; E_ij is the contiguity operator E^q(u_i, u_j)
// for u = (a, b, c, d).
enum class FundamentalTag { Gplus, Gminus, E12, E13, E14, E23, E24, E34 };

inline constexpr std::array<FundamentalTag, 8> kFundamentalTags = {
    FundamentalTag::Gplus, FundamentalTag::Gminus, FundamentalTag::E12,
    FundamentalTag::E13,   FundamentalTag::E14,    FundamentalTag::E23,
    FundamentalTag::E24,   FundamentalTag::E34};

const char* fundamental_name(FundamentalTag t);

// shifts v1, -v1, -v2, -v3, -v4, v4, v3, v2
Shift fundamental_shift(FundamentalTag t);

DiffReflOp build_fundamental(const ParamSet& p, FundamentalTag t);

// Closed-form symbol table:
//   eta(G+)   = t^{v1} (T - T^{-1})
//   eta(G-)   = t^{-v1} q^{-1/2} ((abcd/q^2) T - T^{-1})
//   eta(E_ij) = t^{h} (-(u_i u_j / q) T + T^{-1})
Symbol eta_table(const ParamSet& p, FundamentalTag t);

// eta(L) = q^{k.v1} T^2 + q^{-k.v1} T^{-2}
Symbol eta_L_table(const ParamSet& p);

// Multiplication in the graded ring R:
//   t^h f(T) . t^{h'} f'(T) = t^{h+h'} f(params shifted by h'; q^{-h'.v1/2} T) f'(params; T)
Symbol symbol_mul(const Symbol& x, const Symbol& y, const ParamSet& p);

// pure grading element t^h (unit coefficient)
Symbol t_symbol(const ParamSet& p, const Shift& h);

// omega = tau0 tau1 T^2 + (tau0 tau1)^{-1} T^{-2}, the generator of the
// zero-shift symbol component (the unit rescale of eta(L))
LaurentPoly omega_poly(const ParamSet& p);

struct FactorResult {
    std::array<long, 4> n{0, 0, 0, 0}; // multiplicities for v1..v4
    std::array<int, 4> eps{1, 1, 1, 1};
    // y as a polynomial in omega: degree -> coefficient
    std::map<long, Scalar> y_omega;
    // the ordered product symbol actually divided out (for reconstruction)
    Symbol product;
};

// Factor x in R as (ordered product of fundamental symbols) * y(omega).
// v1-factors are always peeled first; `order` permutes the v2, v3, v4
// blocks, which commute exactly (reorderings involving v1 would pick up
// q-powers).  Exact division failures raise NotInSpanError.
FactorResult factor_symbol(const Symbol& x, const ParamSet& p,
                           const std::array<int, 3>& order = {2, 3, 4});

enum class AdjointKind { Dagger, Star };

struct AdjointImage {
    FundamentalTag tag;
    Scalar prefactor;
};

// Formal adjoint lookup tables (dagger swaps S_{eps v} and S_{-eps v} with
// unit prefactor; star adds the parameter-dependent units).  Verified
// numerically by the quadrature module.
AdjointImage adjoint_table(const ParamSet& p, FundamentalTag t, AdjointKind which);

struct ShiftActionEntry {
    long m;
    bool pass;
    Scalar constant; // eta~_h(S)(q^{m/2})
};

struct ShiftActionReport {
    bool pass = true;
    std::vector<ShiftActionEntry> entries;
    std::string message;
};

// Checks S P_{m,k} = eta~_h(S)(q^{m/2}) P_{m - h.v1, k+h} for m <= mMax.
ShiftActionReport verify_shift_action(const DiffReflOp& s, long mMax);

} // namespace awshift
