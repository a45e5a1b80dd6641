#include "awshift/daha.hpp"

namespace awshift {

namespace {

RatFunc g1_func(const ParamSet& p) {
    Tower t = p.tower();
    Scalar tau1 = p.tau1(), tt1 = p.tt1();
    LaurentPoly num(t), den(t);
    num.add_term(0, tau1 - tau1.inverse());
    num.add_term(1, tt1 - tt1.inverse());
    den.add_term(0, Scalar::from_int(1, t));
    den.add_term(2, Scalar::from_int(-1, t));
    return RatFunc(num, den);
}

RatFunc g0_func(const ParamSet& p) {
    Tower t = p.tower();
    Scalar tau0 = p.tau0(), tt0 = p.tt0(), s = p.s();
    LaurentPoly num(t), den(t);
    num.add_term(0, tau0 - tau0.inverse());
    num.add_term(-1, (tt0 - tt0.inverse()) * s);
    den.add_term(0, Scalar::from_int(1, t));
    den.add_term(-2, -(s * s));
    return RatFunc(num, den);
}

} // namespace

DiffReflOp build_T1(const ParamSet& p) {
    RatFunc g1 = g1_func(p);
    DiffReflOp op(p);
    op.set_plain(0, g1);
    op.set_refl(0, RatFunc::constant(p.tau1()) - g1);
    return op.with_rebuild(build_T1);
}

DiffReflOp build_T0(const ParamSet& p) {
    RatFunc g0 = g0_func(p);
    DiffReflOp op(p);
    op.set_plain(0, g0);
    op.set_refl(-2, RatFunc::constant(p.tau0()) - g0);
    return op.with_rebuild(build_T0);
}

DiffReflOp build_T1inv(const ParamSet& p) {
    Scalar c = p.tau1() - p.tau1().inverse();
    return (build_T1(p) - DiffReflOp::const_op(p, c)).with_rebuild(build_T1inv);
}

DiffReflOp build_T0inv(const ParamSet& p) {
    Scalar c = p.tau0() - p.tau0().inverse();
    return (build_T0(p) - DiffReflOp::const_op(p, c)).with_rebuild(build_T0inv);
}

DiffReflOp build_Z(const ParamSet& p) {
    return DiffReflOp::mult_op(p, RatFunc(LaurentPoly::zpow(p.tower(), 1))).with_rebuild(build_Z);
}

DiffReflOp build_Zinv(const ParamSet& p) {
    return DiffReflOp::mult_op(p, RatFunc(LaurentPoly::zpow(p.tower(), -1)))
        .with_rebuild(build_Zinv);
}

DiffReflOp build_Y(const ParamSet& p) {
    return build_T0(p).compose_plain(build_T1(p)).with_shift(Shift::zero()).with_rebuild(build_Y);
}

DiffReflOp build_Yinv(const ParamSet& p) {
    return build_T1inv(p)
        .compose_plain(build_T0inv(p))
        .with_shift(Shift::zero())
        .with_rebuild(build_Yinv);
}

DiffReflOp build_L(const ParamSet& p) {
    // Y + Y^-1 preserves A_0 but carries reflection layers that vanish only
    // there; the symmetric Cherednik operator is the folded restriction.
    return (build_Y(p) + build_Yinv(p)).folded().with_shift(Shift::zero()).with_rebuild(build_L);
}

DahaGens build_daha(const ParamSet& p) {
    return DahaGens{p,          build_T0(p), build_T1(p), build_T0inv(p), build_T1inv(p),
                    build_Z(p), build_Zinv(p), build_Y(p), build_Yinv(p),  build_L(p)};
}

namespace {

// c_i(z) = (tau_i z - tau_i^-1 z^-1 + tt_i - tt_i^-1)/(z - z^-1)
RatFunc c_func(const ParamSet& p, int i) {
    Tower t = p.tower();
    Scalar tau = i == 0 ? p.tau0() : p.tau1();
    Scalar tt = i == 0 ? p.tt0() : p.tt1();
    LaurentPoly num(t), den(t);
    num.add_term(1, tau);
    num.add_term(-1, -tau.inverse());
    num.add_term(0, tt - tt.inverse());
    den.add_term(1, Scalar::from_int(1, t));
    den.add_term(-1, Scalar::from_int(-1, t));
    return RatFunc(num, den);
}

} // namespace

DiffReflOp build_L_explicit(const ParamSet& p) {
    RatFunc c1 = c_func(p, 1);
    RatFunc c0s = c_func(p, 0).subst_scale(p.s()); // c0(q^{1/2} z)
    RatFunc fwd = c1 * c0s;
    RatFunc bwd = fwd.bar();
    Scalar qk = p.q_kv1();
    DiffReflOp op(p);
    op.set_plain(2, fwd);
    op.set_plain(-2, bwd);
    op.set_plain(0, RatFunc::constant(qk + qk.inverse()) - fwd - bwd);
    return op.with_shift(Shift::zero()).with_rebuild(build_L_explicit);
}

RatFunc f2_of_L(const ParamSet& p) {
    Tower t = p.tower();
    Scalar one = Scalar::from_int(1, t);
    auto lin = [&](const Scalar& u) {
        LaurentPoly f(t);
        f.add_term(0, one);
        f.add_term(1, -u);
        return f;
    };
    LaurentPoly num = lin(p.a()) * lin(p.b()) * lin(p.c()) * lin(p.d());
    LaurentPoly den(t);
    den.add_term(0, one);
    den.add_term(2, -one);
    LaurentPoly den2(t);
    den2.add_term(0, one);
    den2.add_term(2, -p.q());
    return RatFunc(num, den * den2).scaled(p.q_kv1().inverse());
}

LaurentPoly creation_apply(CreationOp which, const DahaGens& g, const LaurentPoly& f,
                           const Scalar& lambda) {
    const ParamSet& p = g.params;
    if (which == CreationOp::Alpha0) {
        // b0'(x) = (tt1 - tt1^-1 + (tt0 - tt0^-1) x)/(1 - x^2) at x = q^{1/2} lambda
        Scalar x = p.s() * lambda;
        Scalar den = Scalar::from_int(1, p.tower()) - x * x;
        if (den.is_zero())
            throw DegenerateParameterError("creation operator alpha0 at 1 - x^2 = 0");
        Scalar b0 = (p.tt1() - p.tt1().inverse() + (p.tt0() - p.tt0().inverse()) * x) / den;
        LaurentPoly zf = f * LaurentPoly::zpow(p.tower(), -1);
        return g.T1inv.apply(zf) - f.scaled(b0);
    }
    // b1'(x) = (tau1 - tau1^-1 + (tau0 - tau0^-1) x)/(1 - x^2) at x = lambda^-1
    Scalar x = lambda.inverse();
    Scalar den = Scalar::from_int(1, p.tower()) - x * x;
    if (den.is_zero())
        throw DegenerateParameterError("creation operator alpha1 at 1 - x^2 = 0");
    Scalar b1 = (p.tau1() - p.tau1().inverse() + (p.tau0() - p.tau0().inverse()) * x) / den;
    return g.T1.apply(f) - f.scaled(b1);
}

} // namespace awshift
