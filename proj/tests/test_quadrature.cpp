#include "doctest.h"

#include "awshift/quadrature.hpp"
#include "test_support.hpp"

using namespace awshift;

// The quadrature unit tests run at a reduced working precision so the whole
// file stays fast; the acceptance suite runs the same checks at 128 digits.
namespace {

struct PrecisionGuard {
    PrecisionGuard(unsigned digits) { set_precision(digits); }
    ~PrecisionGuard() { set_precision(128); }
};

} // namespace

TEST_CASE("constant term basics") {
    PrecisionGuard guard(48);
    BigFloat tol = pow10(-40);
    auto one = [](const BigComplex&) { return BigComplex(1); };
    CtResult r1 = constant_term(one, tol);
    CHECK((r1.value - BigComplex(1)).abs() < tol);
    auto z3 = [](const BigComplex& z) { return z * z * z; };
    CtResult r2 = constant_term(z3, tol);
    CHECK(r2.value.abs() < tol);
}

TEST_CASE("weight evaluator basics") {
    PrecisionGuard guard(48);
    ParamSet p = ParamSet::default_numeric();
    WeightEvaluator wd(p, WeightKind::Delta);
    WeightEvaluator wn(p, WeightKind::Nabla);
    BigFloat tol = pow10(-40);

    SUBCASE("finite and nonzero at z = i") {
        BigComplex v = wd.eval(BigComplex(BigFloat(0), BigFloat(1)));
        CHECK(v.abs() > 0);
    }
    SUBCASE("off-circle evaluation is rejected") {
        CHECK_THROWS(wd.eval(BigComplex(BigFloat("0.5"), BigFloat(0))));
        CHECK_NOTHROW(wd.eval(BigComplex(BigFloat("0.5"), BigFloat(0)), true));
    }
    SUBCASE("magnitude guard") {
        std::array<BigComplex, 5> t{BigComplex(BigFloat(2)), BigComplex(BigFloat(1)),
                                    BigComplex(BigFloat(1)), BigComplex(BigFloat(1)),
                                    BigComplex(BigFloat("0.5"))};
        CHECK_THROWS_AS(WeightEvaluator(ParamSet::numeric(t), WeightKind::Delta),
                        DegenerateParameterError);
    }
    SUBCASE("nabla over delta is the two-root ratio") {
        BigComplex one(1), a = p.a().cplx(), b = p.b().cplx();
        for (long j : {1L, 5L, 11L}) {
            BigComplex z = BigComplex::unit_root(j, 17);
            BigComplex zi = z.inverse();
            BigComplex expect =
                ((one + b * zi) / (one - a * zi)) * ((one - zi * zi) / (one - b * b * zi * zi));
            CHECK((wn.eval(z) / wd.eval(z) - expect).abs() < tol);
        }
    }
    SUBCASE("nabla is bar-symmetric") {
        BigComplex z = BigComplex::unit_root(3, 11);
        CHECK((wn.eval(z) - wn.eval(z.inverse())).abs() < tol);
    }
}

TEST_CASE("orthogonality and the general inner product facts") {
    PrecisionGuard guard(48);
    ParamSet p = ParamSet::default_numeric();
    NumReport rep = verify_orthogonality(p, 3, pow10(-38));
    for (const auto& c : rep.checks) {
        INFO(c.name, " residual ", c.residual.str(6));
        CHECK(c.pass);
    }
}

TEST_CASE("norm formulas, recursions and the weight shift identity") {
    PrecisionGuard guard(48);
    ParamSet p = ParamSet::default_numeric();
    NumReport rep = verify_norms(p, 2, pow10(-35));
    for (const auto& c : rep.checks) {
        INFO(c.name, " residual ", c.residual.str(6));
        CHECK(c.pass);
    }
}

TEST_CASE("paper's displayed normalized positive norm differs by the derived unit") {
    // the displayed (E_{n+1},E_{n+1})_1 with the (1-abcd)^2 prefactor equals
    // the true quotient h_{n+1}/h_0 times (1-abcd)^2 (1-abcd q^{2n}) /
    // ((1-ac)(1-ad)(1-bc)(1-bd)); document the discrepancy factor exactly
    PrecisionGuard guard(48);
    ParamSet p = ParamSet::default_numeric();
    InnerProductEngine eng(p);
    AWFamily fam(p);
    BigComplex got = eng.pair_normalized(fam.E(2), fam.E(2), PairingKind::Round); // n = 1
    BigComplex one(1);
    BigComplex a = p.a().cplx(), b = p.b().cplx(), c = p.c().cplx(), d = p.d().cplx(),
               q = p.q().cplx();
    BigComplex abcd = a * b * c * d;
    long n = 1;
    BigComplex displayed = (one - abcd) * (one - abcd) * qpoch_fin(q, q, n) *
                           qpoch_fin(a * b * q, q, n) * qpoch_fin(a * c * q, q, n) *
                           qpoch_fin(a * d * q, q, n) * qpoch_fin(b * c * q, q, n) *
                           qpoch_fin(b * d * q, q, n) * qpoch_fin(c * d, q, n) /
                           (qpoch_fin(abcd, q, 2 * n + 1) * qpoch_fin(abcd * q, q, n));
    BigComplex unit = (one - a * c) * (one - a * d) * (one - b * c) * (one - b * d) /
                      ((one - abcd) * (one - abcd) * (one - abcd * q.pow_int(2 * n)));
    BigFloat tol = pow10(-35);
    CHECK((got - displayed * unit).abs() < tol);
    CHECK((got - displayed).abs() > pow10(-3)); // genuinely different
}

TEST_CASE("adjoint tables and the Phi conjugation, numerically") {
    PrecisionGuard guard(48);
    ParamSet p = ParamSet::default_numeric();
    NumReport rep = verify_adjoints_numeric(p, 3, pow10(-34), pow10(-30));
    for (const auto& c : rep.checks) {
        INFO(c.name, " residual ", c.residual.str(6));
        CHECK(c.pass);
    }
}

TEST_CASE("matrix weights and block orthogonality") {
    PrecisionGuard guard(48);
    ParamSet p = ParamSet::default_numeric();
    NumReport rep = verify_matrix_weights(p, 1, pow10(-34));
    for (const auto& c : rep.checks) {
        INFO(c.name, " residual ", c.residual.str(6));
        CHECK(c.pass);
    }
}

TEST_CASE("P2 against an independent Gram-Schmidt") {
    // dense Gram-Schmidt on {1, z+z^-1, z^2+z^-2} under < , >' must
    // reproduce the triangular-eigensolve P2
    PrecisionGuard guard(48);
    ParamSet p = ParamSet::default_numeric();
    InnerProductEngine eng(p);
    Tower t = Tower::Complex;
    std::array<LaurentPoly, 3> basis{
        LaurentPoly::from_rat_table({{0, rat(1)}}, t),
        LaurentPoly::from_rat_table({{1, rat(1)}, {-1, rat(1)}}, t),
        LaurentPoly::from_rat_table({{2, rat(1)}, {-2, rat(1)}}, t)};
    std::array<LaurentPoly, 3> ortho = basis;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            // coefficient <b_i, o_j>'/<o_j, o_j>'; the o_j have rational
            // provenance through their construction chain
            BigComplex num = eng.pair(basis[static_cast<size_t>(i)],
                                      ortho[static_cast<size_t>(j)], PairingKind::Angle);
            BigComplex den = eng.pair(ortho[static_cast<size_t>(j)],
                                      ortho[static_cast<size_t>(j)], PairingKind::Angle);
            LaurentPoly proj = ortho[static_cast<size_t>(j)].scaled(Scalar(num / den));
            ortho[static_cast<size_t>(i)] = ortho[static_cast<size_t>(i)] - proj;
        }
    }
    AWFamily fam(p);
    LaurentPoly p2 = fam.P(2);
    BigFloat worst(0);
    for (const auto& [n, c] : p2.terms()) {
        BigComplex diff = c.cplx() - ortho[2].coeff(n).cplx();
        worst = std::max(worst, diff.abs());
    }
    CHECK(worst < pow10(-30));
}
