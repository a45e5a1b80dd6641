#pragma once

#include <array>
#include <vector>

#include "awshift/matshift.hpp"

namespace awshift {

// Exact q -> 1 specialisation.  Operators are built over the JetQ1 tower
// (dual numbers u = q - 1 with k-linear derivative parts, ParamSet::jet_q1)
// and compared against the limit differential-reflection operators below,
// with coefficients in the KLinear tower.

enum class LimitPart { Value, Derivative };

// Component extraction from a jet-coefficient polynomial.  Derivative
// extraction ("divide by q-1, then q -> 1") requires the value parts to
// vanish identically.
LaurentPoly extract_limit(const LaurentPoly& g, LimitPart which);

// promote a rational-coefficient polynomial into a tower
LaurentPoly promote_poly(const LaurentPoly& f, Tower t);

// First-order differential-reflection operator
//   sum r_{e,e'}(z) (z d/dz)^e s1^{e'},  e, e' in {0, 1},
// with rational-in-z coefficients over the KLinear tower.  Acts exactly on
// Laurent polynomials through the usual clearing of denominators.
class DiffReflLimitOp {
public:
    DiffReflLimitOp();

    // coefficient of (z d/dz)^e s1^{e'}
    RatFunc& coeff(int e, int e1) { return c_[static_cast<size_t>(2 * e + e1)]; }
    const RatFunc& coeff(int e, int e1) const { return c_[static_cast<size_t>(2 * e + e1)]; }

    LaurentPoly apply(const LaurentPoly& f) const; // f over KLinear
    std::string str() const;

private:
    std::array<RatFunc, 4> c_;
};

enum class LimitTag { GpSym, GmSym, E13Sym, E24Sym, GpNs, GmNs, E2pNs, E2mNs };

inline constexpr std::array<LimitTag, 8> kLimitTags = {
    LimitTag::GpSym, LimitTag::GmSym, LimitTag::E13Sym, LimitTag::E24Sym,
    LimitTag::GpNs,  LimitTag::GmNs,  LimitTag::E2pNs,  LimitTag::E2mNs};

const char* limit_tag_name(LimitTag t);

// The displayed limit operators with k-symbolic coefficients.
DiffReflLimitOp build_limit_operator(LimitTag t);

// x-variable forms of the four symmetric limits: polynomial differential
// operators alpha(x) d/dx + beta(x) acting on G with F(z) = G((z+z^-1)/2).
struct XFormOp {
    // coefficients of d/dx and of the multiplication part, polynomials in x
    LaurentPoly dx_coeff, mult_coeff; // over KLinear, exponents >= 0
    LaurentPoly apply(const LaurentPoly& g) const;
};
XFormOp build_xform_operator(LimitTag t); // only the four *Sym tags

// symmetric Laurent polynomial <-> polynomial in x = (z + z^-1)/2
LaurentPoly to_x_poly(const LaurentPoly& f);   // f symmetric over KLinear
LaurentPoly from_x_poly(const LaurentPoly& g); // inverse

struct LimitCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct LimitReport {
    bool pass = true;
    std::vector<LimitCheck> checks;
    void add(const std::string& name, bool ok, const std::string& detail = "");
};

// Every displayed q -> 1 limit, verified exactly on monomials |n| <= degree:
// the two Lemma families (including the zeroth-order E12 value limit), both
// Corollary families, the x-variable forms, and the matrix-level
// conjugations through the basis maps.
LimitReport verify_specialisation(int degree);

} // namespace awshift
