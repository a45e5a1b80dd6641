#include <random>

#include "doctest.h"

#include "awshift/speclimit.hpp"
#include "test_support.hpp"

using namespace awshift;
using namespace awshift::testing;

namespace {

Jet rjet(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dc(-5, 5);
    KLin val(Rat(dc(rng)));
    KLin der(Rat(dc(rng)));
    der.c[static_cast<size_t>(1 + (rng() % 4))] = Rat(dc(rng));
    return Jet(val, der);
}

} // namespace

TEST_CASE("jet arithmetic is a commutative ring with the derivation rule") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        Jet x = rjet(rng), y = rjet(rng), z = rjet(rng);
        CHECK((x + y) == (y + x));
        CHECK((x * y) == (y * x));
        CHECK(((x + y) + z) == (x + (y + z)));
        CHECK(((x * y) * z) == (x * (y * z)));
        CHECK((x * (y + z)) == (x * y + x * z));
        // derivation rule is the definition of the product
        CHECK((x * y).der == (x.val * y.der + x.der * y.val));
        if (!x.val.is_zero()) {
            Jet inv = x.inverse();
            CHECK((x * inv) == Jet(Rat(1)));
        }
    }
    // degree guard: a product of two genuinely k-linear scalars overflows
    // the first order
    KLin k1 = KLin::k(1), k2 = KLin::k(2);
    CHECK_THROWS_AS(k1 * k2, JetDegreeError);
}

TEST_CASE("parameter jets at q = 1") {
    ParamSet jp = ParamSet::jet_q1();
    // a = (1, k1), b = (-1, -k2), c = (1, k3 + 1/2), d = (-1, -(k4 + 1/2)), s = (1, 1/2)
    auto der_of = [](const Scalar& s) { return s.jet().der; };
    auto val_of = [](const Scalar& s) { return s.jet().val; };
    CHECK(val_of(jp.a()) == KLin(Rat(1)));
    CHECK(der_of(jp.a()) == KLin::k(1));
    CHECK(val_of(jp.b()) == KLin(Rat(-1)));
    CHECK(der_of(jp.b()) == -KLin::k(2));
    CHECK(val_of(jp.c()) == KLin(Rat(1)));
    KLin c_want = KLin::k(3);
    c_want.c[0] = rat(1, 2);
    CHECK(der_of(jp.c()) == c_want);
    CHECK(val_of(jp.d()) == KLin(Rat(-1)));
    KLin d_want = -KLin::k(4);
    d_want.c[0] = rat(-1, 2);
    CHECK(der_of(jp.d()) == d_want);
    KLin s_want;
    s_want.c[0] = rat(1, 2);
    CHECK(der_of(jp.s()) == s_want);

    // T z has jet coefficient (1, 1/2)
    DiffReflOp T = DiffReflOp::t_pow(jp, 1);
    LaurentPoly z(Tower::JetQ1);
    z.add_term(1, Scalar::from_int(1, Tower::JetQ1));
    LaurentPoly tz = T.apply(z);
    CHECK(tz.coeff(1).jet().val == KLin(Rat(1)));
    CHECK(tz.coeff(1).jet().der == s_want);
}

TEST_CASE("forward operator jet on z + z^-1") {
    ParamSet jp = ParamSet::jet_q1();
    DiffReflOp gp = build_fundamental(jp, FundamentalTag::Gplus);
    LaurentPoly f(Tower::JetQ1);
    f.add_term(1, Scalar::from_int(1, Tower::JetQ1));
    f.add_term(-1, Scalar::from_int(1, Tower::JetQ1));
    LaurentPoly img = gp.apply(f);
    // G+ (z + z^-1) = (s - s^-1) -> jet (0, 1)
    REQUIRE(img.terms().size() == 1);
    CHECK(img.coeff(0).jet().val.is_zero());
    CHECK(img.coeff(0).jet().der == KLin(Rat(1)));
    LaurentPoly lim = extract_limit(img, LimitPart::Derivative);
    CHECK(lim.coeff(0).klin() == KLin(Rat(1)));
}

TEST_CASE("E12 has the zeroth-order limit 2f") {
    ParamSet jp = ParamSet::jet_q1();
    DiffReflOp e12 = build_fundamental(jp, FundamentalTag::E12);
    for (int n = 0; n <= 4; ++n) {
        LaurentPoly f(Tower::JetQ1);
        f.add_term(n, Scalar::from_int(1, Tower::JetQ1));
        if (n) f.add_term(-n, Scalar::from_int(1, Tower::JetQ1));
        LaurentPoly got = extract_limit(e12.apply(f), LimitPart::Value);
        LaurentPoly want(Tower::KLinear);
        want.add_term(n, Scalar::from_int(2, Tower::KLinear));
        if (n) want.add_term(-n, Scalar::from_int(2, Tower::KLinear));
        CHECK(got.equals(want));
    }
}

TEST_CASE("derivative extraction requires a vanishing value part") {
    ParamSet jp = ParamSet::jet_q1();
    DiffReflOp e12 = build_fundamental(jp, FundamentalTag::E12);
    LaurentPoly f(Tower::JetQ1);
    f.add_term(1, Scalar::from_int(1, Tower::JetQ1));
    f.add_term(-1, Scalar::from_int(1, Tower::JetQ1));
    // E12 is O(1), not o(1)
    CHECK_THROWS(extract_limit(e12.apply(f), LimitPart::Derivative));
}

TEST_CASE("E2+ limit on constants") {
    DiffReflLimitOp e2p = build_limit_operator(LimitTag::E2pNs);
    LaurentPoly one = LaurentPoly::constant(Scalar::from_int(1, Tower::KLinear));
    LaurentPoly img = e2p.apply(one);
    // -(k1 + k3 - 1/2); the reflection terms cancel on constants
    KLin want = -(KLin::k(1) + KLin::k(3));
    want.c[0] = rat(1, 2);
    REQUIRE(img.terms().size() == 1);
    CHECK(img.coeff(0).klin() == want);
}

TEST_CASE("x-variable conversion round trip") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> de(0, 6), dc(-9, 9);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly f(Tower::KLinear);
        for (int j = 0; j < 3; ++j) {
            int e = de(rng);
            Scalar c = Scalar::from_int(dc(rng), Tower::KLinear);
            f.add_term(e, c);
            if (e) f.add_term(-e, c);
        }
        CHECK(from_x_poly(to_x_poly(f)).equals(f));
    }
}

TEST_CASE("full specialisation suite at degree 6") {
    LimitReport rep = verify_specialisation(6);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
    CHECK(rep.pass);
}

TEST_CASE("Gm limit matches the x-variable backward form on symmetric input") {
    // Gm_sym in x: 2(x^2-1) d/dx + 2(2 k.v1 - 1) x + 4 k.v3
    DiffReflLimitOp gm = build_limit_operator(LimitTag::GmSym);
    XFormOp xop = build_xform_operator(LimitTag::GmSym);
    LaurentPoly f(Tower::KLinear);
    f.add_term(2, Scalar::from_int(1, Tower::KLinear));
    f.add_term(-2, Scalar::from_int(1, Tower::KLinear));
    f.add_term(0, Scalar::from_int(-3, Tower::KLinear));
    CHECK(from_x_poly(xop.apply(to_x_poly(f))).equals(gm.apply(f)));
}
