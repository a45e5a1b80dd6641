#include <random>

#include "doctest.h"

#include "awshift/families.hpp"
#include "awshift/symshift.hpp"
#include "test_support.hpp"

using namespace awshift;
using namespace awshift::testing;

TEST_CASE("basic actions of T1 and Y") {
    ParamSet p = sample_params();
    DahaGens g = build_daha(p);
    LaurentPoly one = LaurentPoly::constant(p.from_int(1));

    // T1 . 1 = tau1
    CHECK(g.T1.apply(one).equals(one.scaled(p.tau1())));
    // Y . 1 = q^{k.v1} = tau0 tau1
    CHECK(g.Y.apply(one).equals(one.scaled(p.q_kv1())));
    // L . 1 = (q^{k'_1} + q^{-k'_1})
    Scalar qk = p.q_kv1();
    CHECK(g.L.apply(one).equals(one.scaled(qk + qk.inverse())));

    // T1 z = tau1^-1 z^-1 - (tt1 - tt1^-1)
    LaurentPoly img = g.T1.apply(zpow_rat(1));
    CHECK(img.coeff(-1).equals(p.tau1().inverse()));
    CHECK(img.coeff(0).equals(-(p.tt1() - p.tt1().inverse())));
    CHECK(img.terms().size() == 2);
}

TEST_CASE("T1 action on monomials from the basic representation") {
    // direct evaluation gives, for n > 0,
    //   T1 z^n = tau1^-1 z^-n - (tau1 - tau1^-1) (z^{n-2} + ... + z^{2-n})
    //                        - (tt1 - tt1^-1) (z^{n-1} + z^{n-3} + ... + z^{1-n})
    // (the abbreviated two-term form that drops the geometric sums fails at
    // n = 1 already; the basic representation is the ground truth here)
    ParamSet p = sample_params();
    DahaGens g = build_daha(p);
    for (int n = 1; n <= 6; ++n) {
        LaurentPoly expect(Tower::Rational);
        expect.add_term(-n, p.tau1().inverse());
        for (int e = n - 2; e >= 2 - n; e -= 2) expect.add_term(e, -(p.tau1() - p.tau1().inverse()));
        for (int e = n - 1; e >= 1 - n; e -= 2) expect.add_term(e, -(p.tt1() - p.tt1().inverse()));
        CHECK(g.T1.apply(zpow_rat(n)).equals(expect));
    }
}

TEST_CASE("Hecke quadratic relations on z^n") {
    std::mt19937_64 rng(5150);
    for (int sample = 0; sample < 3; ++sample) {
        ParamSet p = sampled(rng);
        DahaGens g = build_daha(p);
        DiffReflOp q0 = g.T0.compose_plain(g.T0) -
                        g.T0.scaled(p.tau0() - p.tau0().inverse()) -
                        DiffReflOp::identity(p);
        DiffReflOp q1 = g.T1.compose_plain(g.T1) -
                        g.T1.scaled(p.tau1() - p.tau1().inverse()) -
                        DiffReflOp::identity(p);
        for (int n = -6; n <= 6; ++n) {
            CHECK(q0.apply(zpow_rat(n)).is_zero());
            CHECK(q1.apply(zpow_rat(n)).is_zero());
        }
    }
}

TEST_CASE("cross relations on z^n") {
    std::mt19937_64 rng(6021);
    for (int sample = 0; sample < 3; ++sample) {
        ParamSet p = sampled(rng);
        DahaGens g = build_daha(p);
        DiffReflOp t0zi = g.T0.compose_plain(g.Zinv);
        DiffReflOp t1z = g.T1.compose_plain(g.Z);
        // (T0 Z^-1 - tt0^-1 q^-1/2)(T0 Z^-1 + tt0 q^-1/2) = 0
        Scalar m0 = p.tt0().inverse() / p.s(), p0 = p.tt0() / p.s();
        DiffReflOp r0 = t0zi.compose_plain(t0zi) - t0zi.scaled(m0 - p0) -
                        DiffReflOp::const_op(p, m0 * p0);
        // (T1 Z - tt1^-1)(T1 Z + tt1) = 0
        Scalar m1 = p.tt1().inverse(), p1 = p.tt1();
        DiffReflOp r1 = t1z.compose_plain(t1z) - t1z.scaled(m1 - p1) -
                        DiffReflOp::const_op(p, m1 * p1);
        for (int n = -6; n <= 6; ++n) {
            CHECK(r0.apply(zpow_rat(n)).is_zero());
            CHECK(r1.apply(zpow_rat(n)).is_zero());
        }
    }
}

TEST_CASE("Y^-1 inverts Y and L is symmetric") {
    ParamSet p = sample_params();
    DahaGens g = build_daha(p);
    DiffReflOp yyi = g.Y.compose_plain(g.Yinv);
    DiffReflOp yiy = g.Yinv.compose_plain(g.Y);
    for (int n = -6; n <= 6; ++n) {
        CHECK(yyi.apply(zpow_rat(n)).equals(zpow_rat(n)));
        CHECK(yiy.apply(zpow_rat(n)).equals(zpow_rat(n)));
    }
    CHECK(g.L.is_symmetric());
    CHECK(!g.Y.is_symmetric());
}

TEST_CASE("L from the c-function decomposition") {
    std::mt19937_64 rng(40);
    for (int sample = 0; sample < 2; ++sample) {
        ParamSet p = sampled(rng);
        DiffReflOp L1 = build_L(p);
        DiffReflOp L2 = build_L_explicit(p);
        CHECK(L1.equals(L2));
        // the unfolded Y + Y^-1 agrees with L on A_0
        DahaGens g = build_daha(p);
        DiffReflOp ysum = g.Y + g.Yinv;
        for (int n = 0; n <= 6; ++n) {
            LaurentPoly f = sym_monomial(Tower::Rational, n);
            CHECK(ysum.apply(f).equals(L1.apply(f)));
        }
        // T^2 layer is f_{2,k}
        CHECK(L2.plain_coeff(2).equals(f2_of_L(p)));
        // f2 numerator vanishes at z = a^-1
        RatFunc f2 = f2_of_L(p);
        CHECK(f2.num().eval(p.a().inverse()).is_zero());
    }
}

TEST_CASE("transmutation S_k L_k = L_{k+h} S_k for the fundamental operators") {
    std::mt19937_64 rng(41);
    ParamSet p = sampled(rng);
    DiffReflOp Lk = build_L(p);
    for (FundamentalTag t : kFundamentalTags) {
        DiffReflOp s = build_fundamental(p, t);
        DiffReflOp Lkh = build_L(p.shifted(fundamental_shift(t)));
        for (int n = 0; n <= 6; ++n) {
            LaurentPoly f = sym_monomial(Tower::Rational, n);
            CHECK(s.apply(Lk.apply(f)).equals(Lkh.apply(s.apply(f))));
        }
    }
}

TEST_CASE("creation operators step the ladder") {
    ParamSet p = sample_params();
    DahaGens g = build_daha(p);
    AWFamily fam(p);
    LaurentPoly e0 = fam.E(0);

    // alpha0 on E0 (lambda = q^{k'_1}) = tau1 E1
    Scalar l0 = AWFamily::y_eigenvalue(p, 0);
    LaurentPoly a0 = creation_apply(CreationOp::Alpha0, g, e0, l0);
    CHECK(a0.equals(fam.E(1).scaled(p.tau1())));

    // alpha1 on E1 (lambda = q^{-1-k'_1}) = tau1^-1 E_{-1}
    Scalar l1 = AWFamily::y_eigenvalue(p, 1);
    LaurentPoly a1 = creation_apply(CreationOp::Alpha1, g, fam.E(1), l1);
    CHECK(a1.equals(fam.E(-1).scaled(p.tau1().inverse())));

    // results are Y-eigenvectors with the expected eigenvalues
    CHECK(g.Y.apply(a0).equals(a0.scaled(AWFamily::y_eigenvalue(p, 1))));
    CHECK(g.Y.apply(a1).equals(a1.scaled(AWFamily::y_eigenvalue(p, -1))));
}
