#pragma once

#include <array>
#include <vector>

#include "awshift/symshift.hpp"

namespace awshift {

// 2-vectors / 2x2 matrices of Laurent polynomials.  Vectors representing
// elements of A_0^2 have symmetric entries.
struct VecPoly2 {
    LaurentPoly x, y;

    bool equals(const VecPoly2& o) const { return x.equals(o.x) && y.equals(o.y); }
};

struct MatPoly2 {
    // row-major entries a(0,0) a(0,1) a(1,0) a(1,1)
    std::array<LaurentPoly, 4> e;

    const LaurentPoly& at(int r, int c) const { return e[static_cast<size_t>(2 * r + c)]; }
    LaurentPoly& at(int r, int c) { return e[static_cast<size_t>(2 * r + c)]; }
    static MatPoly2 zero(Tower t) {
        return {{LaurentPoly(t), LaurentPoly(t), LaurentPoly(t), LaurentPoly(t)}};
    }
    MatPoly2 operator*(const MatPoly2& o) const;
    MatPoly2 operator+(const MatPoly2& o) const;
    MatPoly2 operator-(const MatPoly2& o) const;
    MatPoly2 scaled(const Scalar& c) const;
    VecPoly2 operator*(const VecPoly2& v) const;
    bool equals(const MatPoly2& o) const;
};

// 2x2 scalar matrix
struct MatScalar2 {
    std::array<Scalar, 4> e;
    const Scalar& at(int r, int c) const { return e[static_cast<size_t>(2 * r + c)]; }
    MatScalar2 operator*(const MatScalar2& o) const;
    MatScalar2 inverse() const;
    bool equals(const MatScalar2& o) const;
};

// 2x2 matrix of difference-reflection operators (entries are expected to be
// symmetric difference operators in the matrix-shift-operator setting)
struct MatOp2 {
    std::array<DiffReflOp, 4> e;
    // structural entry shifts (see matrix_entry_shifts)
    const DiffReflOp& at(int r, int c) const { return e[static_cast<size_t>(2 * r + c)]; }
    VecPoly2 apply(const VecPoly2& v) const;
    MatOp2 compose_plain(const MatOp2& o) const;
    MatOp2 operator+(const MatOp2& o) const;
    MatOp2 operator-(const MatOp2& o) const;
    MatOp2 scaled(const Scalar& c) const;
    bool equals(const MatOp2& o) const;
};

enum class BasisKind { Steinberg, Koornwinder }; // {1, z} and {1, z^-1(1-az)(1-bz)}

// B_s f2-component and composition: A_0^2 -> A
LaurentPoly basis_compose(const VecPoly2& v, BasisKind basis, const ParamSet& p);
// exact inverse transforms (Prop. of the inverse basis maps); ko needs ab != 1
VecPoly2 basis_decompose(const LaurentPoly& f, BasisKind basis, const ParamSet& p);

// V_k = ((-a^-1, -b^-1), (1, 1)) and its entrywise-* partner
MatScalar2 v_matrix(const ParamSet& p);
MatScalar2 v_matrix_star(const ParamSet& p);
MatScalar2 v_matrix_inverse(const ParamSet& p);

// Matrix weight data: polynomial factor and the nabla label bookkeeping of
// each diagonal entry (numeric evaluation lives in the quadrature module).
struct MatrixWeight {
    BasisKind basis;
    // st: common factor matrix, both entries carry nabla_k
    // ko: diagonal entries (factor, label shift of nabla)
    MatPoly2 factor;
    std::array<Shift, 2> nabla_labels; // per row/diagonal entry (ko); st: both zero
};

MatrixWeight matrix_weight(BasisKind basis, const ParamSet& p);

// E_st,m = [B^-1 E_-m | B^-1 E_{m+1}],  E_ko,m = [B^-1 E_-m | B^-1 E_m]
// P_st,m = diag(P_{m,k+e1}, P_{m,k+e2}), P_ko,m = diag(P_{m,k}, P_{m-1,k+v1+v2})
struct MatrixFamilies {
    MatPoly2 E, P;
};
MatrixFamilies build_matrix_families(BasisKind basis, const ParamSet& p, long m);

// C_s,k(T) as 2x2 rational functions in the symbol variable (stored as
// RatFunc in a formal variable)
struct CMatrix {
    BasisKind basis;
    std::array<RatFunc, 4> e;
    const RatFunc& at(int r, int c) const { return e[static_cast<size_t>(2 * r + c)]; }
    // evaluate at T = q^{m/2}
    MatScalar2 eval_qhalf(const ParamSet& p, long m) const;
};

CMatrix c_matrix(BasisKind basis, const ParamSet& p);

// The six named non-symmetric shift operators
enum class NamedNsTag { Gp, Gm, E1p, E1m, E2p, E2m };

inline constexpr std::array<NamedNsTag, 6> kNamedNsTags = {
    NamedNsTag::Gp, NamedNsTag::Gm, NamedNsTag::E1p,
    NamedNsTag::E1m, NamedNsTag::E2p, NamedNsTag::E2m};

const char* named_ns_name(NamedNsTag t);
Shift named_ns_shift(NamedNsTag t);
// the symmetric operator whose diagonal matrix generates it
FundamentalTag named_ns_source(NamedNsTag t);

// Conjugates the diagonal matrix operator through the basis maps and
// returns the scalar difference-reflection operator in normal form.
DiffReflOp build_named_nonsym(const ParamSet& p, NamedNsTag t);

// the diagonal matrix operator (S-matrix for Gp/Gm/E1p/E1m at labels
// k+eps_1, k+eps_2; K-matrix for E2p/E2m at labels k, k+eps1+eps2 with the
// q^{-1/2} scale on the second entry)
MatOp2 named_ns_matrix(const ParamSet& p, NamedNsTag t);

// structural entry shifts of an s-matrix shift operator with shift h:
// st: ((h, h+v3+v4), (h-v3-v4, h)); ko: ((h, h-v1-v2), (h+v1+v2, h))
std::array<Shift, 4> matrix_entry_shifts(BasisKind basis, const Shift& h);

struct DescendReport {
    bool entry_shifts_ok = true;
    bool offdiag_vanish = false;
    bool necessary_ok = false;   // (1 1) eta (1 -1)^T == 0
    bool eigenvector_ok = true;  // ko with h.v1 < 0 only
    bool descends = false;
    std::string detail;
};

// Diagnostics for "X descends to the vector level": computes eta_{s,h}(X),
// forms C_{s,k+h}(q^{-h.v1/2} T)^{-1} [V-conjugation if st] eta C_{s,k}(T),
// and checks the off-diagonal vanishing, the (1 1)eta(1 -1)^T necessary
// condition, and (ko, h.v1<0) the eigenvector condition.
DescendReport descend_diagnostics(const MatOp2& X, BasisKind basis, const Shift& h,
                                  const ParamSet& p);

struct MatCheckResult {
    bool pass = true;
    std::string detail;
};

// Builds both sides of the matrix-Y decomposition (LHS by conjugating the
// DAHA Y through the basis, RHS from L's, constants and composed
// fundamental operators) and compares them on VecPoly2 monomials up to
// max_degree.
MatCheckResult matrix_Y_identity_check(const ParamSet& p, BasisKind basis, int max_degree);

// S restricted to A_0 equals prefactor * X (or exhibits asymmetry when
// expect_preserves is false)
MatCheckResult restriction_check(const DiffReflOp& s, const DiffReflOp& x,
                                 const Scalar& prefactor, int max_degree);
MatCheckResult restriction_fails_check(const DiffReflOp& s);

// Rodrigues recursion: E_{-n} and E_{n+1} from iterated backward operators
std::pair<LaurentPoly, LaurentPoly> rodrigues_E(const ParamSet& p, long n);

} // namespace awshift
