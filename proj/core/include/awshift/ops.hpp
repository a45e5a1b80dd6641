#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "awshift/laurent.hpp"

namespace awshift {

class DiffReflOp;

// Rebuilds the operator at another parameter set (label change).  Needed by
// the graded composition, which re-instantiates the left factor at shifted
// parameters, and by all label-shifted evaluations.
using OpBuilder = std::function<DiffReflOp(const ParamSet&)>;

// Graded symbol t^h * f(T): the eta-image of a shift operator.
struct Symbol {
    Shift h;
    std::map<int, Scalar> tpoly; // T-exponent -> coefficient
    std::function<Symbol(const ParamSet&)> rebuild;

    bool is_zero() const { return tpoly.empty(); }
    Scalar coeff(int n, Tower t) const {
        auto it = tpoly.find(n);
        return it == tpoly.end() ? Scalar::from_int(0, t) : it->second;
    }
    // f(q^{m/2}) for integer m (the scalar that multiplies P_m)
    Scalar eval_qhalf(const ParamSet& p, long m) const;
    // T -> zeta*T
    Symbol arg_scaled(const Scalar& zeta) const;
    Symbol scaled(const Scalar& c) const;
    bool equals(const Symbol& o) const;
    std::string str() const;
};

// Normal-form difference-reflection operator
//   sum_n c_n(z) T^n  +  sum_n d_n(z) T^n s1,
// with T f(z) = f(q^{1/2} z) and s1 f(z) = f(z^{-1}).  Reflections are
// pushed to the right, rational coefficients to the left; s0 = T^{-2} s1.
class DiffReflOp {
public:
    explicit DiffReflOp(ParamSet p) : params_(std::move(p)) {}

    static DiffReflOp zero(const ParamSet& p) { return DiffReflOp(p); }
    static DiffReflOp identity(const ParamSet& p);
    static DiffReflOp t_pow(const ParamSet& p, int n);
    static DiffReflOp s1_op(const ParamSet& p);
    static DiffReflOp s0_op(const ParamSet& p); // s0 z^n = q^n z^-n
    static DiffReflOp mult_op(const ParamSet& p, const RatFunc& f);
    static DiffReflOp const_op(const ParamSet& p, const Scalar& c);

    const ParamSet& params() const { return params_; }
    const std::map<int, RatFunc>& plain() const { return plain_; }
    const std::map<int, RatFunc>& refl() const { return refl_; }
    bool is_zero() const { return plain_.empty() && refl_.empty(); }

    const std::optional<Shift>& shift() const { return shift_; }
    DiffReflOp with_shift(const Shift& h) const;
    const OpBuilder& rebuild() const { return rebuild_; }
    DiffReflOp with_rebuild(OpBuilder b) const;
    DiffReflOp rebuilt_at(const ParamSet& p) const;

    void set_plain(int n, const RatFunc& c);
    void set_refl(int n, const RatFunc& c);
    RatFunc plain_coeff(int n) const;
    RatFunc refl_coeff(int n) const;

    // exact application; clears denominators, applies T^n and s1, divides
    // exactly.  Non-exact division raises NonExactDivisionError.
    LaurentPoly apply(const LaurentPoly& f) const;

    DiffReflOp operator+(const DiffReflOp& o) const;
    DiffReflOp operator-(const DiffReflOp& o) const;
    DiffReflOp operator-() const;
    DiffReflOp scaled(const Scalar& c) const;
    DiffReflOp scaled_rf(const RatFunc& c) const;

    // plain operator product (no parameter re-instantiation)
    DiffReflOp compose_plain(const DiffReflOp& o) const;

    // true iff the reflection part vanishes and c_n(z) = c_{-n}(z^{-1})
    bool is_symmetric() const;

    // even collects the T^{2Z} layers, odd the rest (both halves of plain
    // and refl); even + odd = *this
    std::pair<DiffReflOp, DiffReflOp> parity_split() const;

    // Collapse T^n s1 layers onto T^n.  On A_0 the reflection acts as the
    // identity, so this is the symmetric-difference restriction of an
    // operator that preserves A_0 (e.g. Y + Y^-1, whose reflection part
    // vanishes only on A_0).
    DiffReflOp folded() const;

    bool equals(const DiffReflOp& o) const;

    // deterministic text rendering: sorted by T-power, plain before refl
    std::string str() const;

private:
    ParamSet params_;
    std::map<int, RatFunc> plain_, refl_;
    std::optional<Shift> shift_;
    OpBuilder rebuild_;
};

// The graded composition S1 o S2 = S1_{k+h2} S2_k: S1 is re-instantiated at
// apply_shift(p, h2) before the plain product.  Both operators must carry
// known shifts.
DiffReflOp compose_graded(const DiffReflOp& s1, const DiffReflOp& s2);

// Leading z-power symbol of a symmetric shift operator with declared shift
// h.  Every c_n must have degree at infinity <= d = -h.v1; the terms of
// degree exactly d contribute lead(c_n) T^n.  Degree violations and a
// vanishing symbol raise NotAShiftOperatorError (a test signal).  The
// `domain` overload names the label at which s is claimed to lie in S(h)
// (needed when the operator was assembled from pieces at other labels).
Symbol eta_symbol(const DiffReflOp& s, const Shift& h);
Symbol eta_symbol(const DiffReflOp& s, const Shift& h, const ParamSet& domain);

} // namespace awshift
