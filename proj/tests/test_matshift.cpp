#include <random>

#include "doctest.h"

#include "awshift/matshift.hpp"
#include "test_support.hpp"

using namespace awshift;
using namespace awshift::testing;

namespace {

VecPoly2 matvec(const MatScalar2& m, const VecPoly2& v) {
    return {v.x.scaled(m.at(0, 0)) + v.y.scaled(m.at(0, 1)),
            v.x.scaled(m.at(1, 0)) + v.y.scaled(m.at(1, 1))};
}

MatPoly2 mat_times_scalar(const MatPoly2& m, const MatScalar2& a) {
    MatPoly2 r = m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = m.at(i, 0).scaled(a.at(0, j)) + m.at(i, 1).scaled(a.at(1, j));
    return r;
}

MatPoly2 scalar_times_mat(const MatScalar2& a, const MatPoly2& m) {
    MatPoly2 r = m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.at(i, j) = m.at(0, j).scaled(a.at(i, 0)) + m.at(1, j).scaled(a.at(i, 1));
    return r;
}

MatScalar2 transposed(const MatScalar2& m) {
    return {{m.at(0, 0), m.at(1, 0), m.at(0, 1), m.at(1, 1)}};
}

// (1 - uz)(1 - uz^-1)
LaurentPoly sym_quad(const ParamSet& p, const Scalar& u) {
    LaurentPoly f(p.tower());
    f.add_term(0, p.from_int(1) + u * u);
    f.add_term(1, -u);
    f.add_term(-1, -u);
    return f;
}

} // namespace

TEST_CASE("basis decomposition examples") {
    ParamSet p = sample_params();
    SUBCASE("st: z^2 -> (-1, z + z^-1)") {
        VecPoly2 v = basis_decompose(zpow_rat(2), BasisKind::Steinberg, p);
        CHECK(v.x.equals(LaurentPoly::constant(p.from_int(-1))));
        CHECK(v.y.equals(sym_monomial(Tower::Rational, 1)));
    }
    SUBCASE("st: 1 -> (1, 0)") {
        VecPoly2 v =
            basis_decompose(LaurentPoly::constant(p.from_int(1)), BasisKind::Steinberg, p);
        CHECK(v.x.equals(LaurentPoly::constant(p.from_int(1))));
        CHECK(v.y.is_zero());
    }
    SUBCASE("ko: z -> ((a+b-(z+z^-1))/(ab-1), 1/(ab-1))") {
        VecPoly2 v = basis_decompose(zpow_rat(1), BasisKind::Koornwinder, p);
        Scalar inv = (p.a() * p.b() - p.from_int(1)).inverse();
        LaurentPoly ex =
            (LaurentPoly::constant(p.a() + p.b()) - sym_monomial(Tower::Rational, 1))
                .scaled(inv);
        CHECK(v.x.equals(ex));
        CHECK(v.y.equals(LaurentPoly::constant(inv)));
    }
    SUBCASE("compose o decompose is the identity") {
        std::mt19937_64 rng(404);
        std::uniform_int_distribution<int> dexp(-6, 6), dcoef(-9, 9);
        for (int i = 0; i < 12; ++i) {
            LaurentPoly f(Tower::Rational);
            for (int j = 0; j < 4; ++j) f.add_term(dexp(rng), Scalar(Rat(dcoef(rng))));
            for (BasisKind b : {BasisKind::Steinberg, BasisKind::Koornwinder}) {
                VecPoly2 v = basis_decompose(f, b, p);
                CHECK(v.x.is_symmetric());
                CHECK(v.y.is_symmetric());
                CHECK(basis_compose(v, b, p).equals(f));
            }
        }
    }
}

TEST_CASE("matrix weight V-similarity") {
    // V^T W_st V^* = (a-b)/2 diag(a^-1 (1-az)(1-az^-1), -b^-1 (1-bz)(1-bz^-1))
    //             = -(a-b)/(2ab) diag(-b nabla-ratio_1, a nabla-ratio_2) factor
    ParamSet p = sample_params();
    MatrixWeight w = matrix_weight(BasisKind::Steinberg, p);
    MatPoly2 conj =
        mat_times_scalar(scalar_times_mat(transposed(v_matrix(p)), w.factor), v_matrix_star(p));
    Scalar half_amb = (p.a() - p.b()) * p.from_rat(rat(1, 2));
    MatPoly2 expect = MatPoly2::zero(Tower::Rational);
    expect.at(0, 0) = sym_quad(p, p.a()).scaled(half_amb / p.a());
    expect.at(1, 1) = sym_quad(p, p.b()).scaled(-(half_amb / p.b()));
    CHECK(conj.equals(expect));

    // determinant of the conjugated factor is the product of the four
    // displayed linear factors (up to the scalar prefactors)
    LaurentPoly det = conj.at(0, 0) * conj.at(1, 1) - conj.at(0, 1) * conj.at(1, 0);
    LaurentPoly lin = sym_quad(p, p.a()) * sym_quad(p, p.b());
    Scalar pref = -(half_amb * half_amb / (p.a() * p.b()));
    CHECK(det.equals(lin.scaled(pref)));

    // W_st has no pole at a = b (polynomial entries): instantiate a=b
    // tau-values and verify the off-diagonals are finite polynomials
    ParamSet pab = ParamSet::rational({rat(2), rat(3), rat(5), rat(1), rat(1, 2)}); // tt1=1 -> b=-a
    MatrixWeight wab = matrix_weight(BasisKind::Steinberg, pab);
    CHECK(!wab.factor.at(0, 1).is_zero());
}

TEST_CASE("C-matrices against the NLO closed forms") {
    std::mt19937_64 rng(222);
    ParamSet p = sampled(rng);
    SUBCASE("C_st(q^{m/2}) = ((1, c_{m+1}), (0, 1))") {
        CMatrix c = c_matrix(BasisKind::Steinberg, p);
        for (long m = 0; m <= 6; ++m) {
            MatScalar2 v = c.eval_qhalf(p, m);
            CHECK(v.at(0, 0).equals(p.from_int(1)));
            CHECK(v.at(1, 0).is_zero());
            CHECK(v.at(1, 1).equals(p.from_int(1)));
            CHECK(v.at(0, 1).equals(AWFamily::nlo_c(p, m + 1)));
        }
    }
    SUBCASE("V^-1 C_st matches the displayed rational matrix") {
        CMatrix c = c_matrix(BasisKind::Steinberg, p);
        // (V^-1 C)(q^{m/2}) = ab/(a-b) ((1, -b^-1 X_b), (-1, a^-1 X_a))
        Scalar ab = p.a() * p.b(), amb = p.a() - p.b();
        for (long m = 1; m <= 5; ++m) {
            MatScalar2 lhs = v_matrix_inverse(p) * c.eval_qhalf(p, m);
            Scalar t2 = p.s().pow(2 * m);
            Scalar den = ab * p.c() * p.d() * t2 - t2.inverse();
            // X_b = (bc T - T^-1)(bd T - T^-1)/(abcd T^2 - T^-2) at T = q^{m/2}
            Scalar tm = p.s().pow(m);
            Scalar Xb = (p.b() * p.c() * tm - tm.inverse()) *
                        (p.b() * p.d() * tm - tm.inverse()) / den;
            Scalar Xa = (p.a() * p.c() * tm - tm.inverse()) *
                        (p.a() * p.d() * tm - tm.inverse()) / den;
            Scalar f = ab / amb;
            CHECK(lhs.at(0, 0).equals(f));
            CHECK(lhs.at(0, 1).equals(-(f * Xb / p.b())));
            CHECK(lhs.at(1, 0).equals(-f));
            CHECK(lhs.at(1, 1).equals(f * Xa / p.a()));
        }
    }
    SUBCASE("C_ko(q^{m/2}) = 1/(ab-1) ((ab - ct_m, -1), (ct_m - 1, 1))") {
        CMatrix c = c_matrix(BasisKind::Koornwinder, p);
        Scalar inv = (p.a() * p.b() - p.from_int(1)).inverse();
        for (long m = 1; m <= 6; ++m) {
            MatScalar2 v = c.eval_qhalf(p, m);
            Scalar ct = AWFamily::nlo_ctilde(p, m);
            CHECK(v.at(0, 0).equals((p.a() * p.b() - ct) * inv));
            CHECK(v.at(0, 1).equals(-inv));
            CHECK(v.at(1, 0).equals((ct - p.from_int(1)) * inv));
            CHECK(v.at(1, 1).equals(inv));
        }
    }
}

TEST_CASE("matrix families relation E = (V P V^-1) C") {
    std::mt19937_64 rng(333);
    ParamSet p = sampled(rng);
    SUBCASE("Steinberg, m <= 5") {
        CMatrix c = c_matrix(BasisKind::Steinberg, p);
        for (long m = 0; m <= 5; ++m) {
            MatrixFamilies fams = build_matrix_families(BasisKind::Steinberg, p, m);
            MatPoly2 rhs = mat_times_scalar(
                mat_times_scalar(scalar_times_mat(v_matrix(p), fams.P), v_matrix_inverse(p)),
                c.eval_qhalf(p, m));
            CHECK(fams.E.equals(rhs));
        }
    }
    SUBCASE("Koornwinder, 1 <= m <= 5") {
        CMatrix c = c_matrix(BasisKind::Koornwinder, p);
        for (long m = 1; m <= 5; ++m) {
            MatrixFamilies fams = build_matrix_families(BasisKind::Koornwinder, p, m);
            MatPoly2 rhs = mat_times_scalar(fams.P, c.eval_qhalf(p, m));
            CHECK(fams.E.equals(rhs));
        }
    }
    SUBCASE("Koornwinder m = 0 with the canonical x = y = 0") {
        MatrixFamilies fams = build_matrix_families(BasisKind::Koornwinder, p, 0);
        MatScalar2 conv{{p.from_int(1), p.from_int(1), p.from_int(0), p.from_int(0)}};
        MatPoly2 rhs = mat_times_scalar(fams.P, conv);
        CHECK(fams.E.equals(rhs));
    }
}

TEST_CASE("named non-symmetric shift operator actions") {
    std::mt19937_64 rng(444);
    ParamSet p = sampled(rng);
    AWFamily fam(p);
    Scalar one = p.from_int(1);
    Scalar ab = p.a() * p.b(), cd = p.c() * p.d(), ac = p.a() * p.c(), bd = p.b() * p.d();
    Scalar abcd = ab * cd;
    auto qp = [&](long j) { return p.s().pow(j); };

    struct Case {
        NamedNsTag tag;
        // action on E_{-n} and on E_{n+1} (or E_n for the E2 family):
        // constants as functions of n and the image index
        std::function<Scalar(long)> c_neg, c_pos;
        std::function<long(long)> img_neg, img_pos;
        bool e2_family = false;
    };
    std::vector<Case> cases;
    cases.push_back({NamedNsTag::Gp,
                     [&](long n) { return p.s().inverse() * (qp(n) - qp(-n)); },
                     [&](long n) { return qp(n) - qp(-n); },
                     [](long n) { return 1 - n; }, [](long n) { return n; }, false});
    cases.push_back({NamedNsTag::Gm,
                     [&](long n) { return abcd / p.q() * qp(n) - qp(-n); },
                     [&](long n) { return p.s().inverse() * (abcd / p.q() * qp(n) - qp(-n)); },
                     [](long n) { return -n - 1; }, [](long n) { return n + 2; }, false});
    // the displayed action lines for E1+/E1- on E_{-n} carry q^{-1/2} and
    // q^{+1/2}; the column ratio of the generating matrix forces q^{-h_1},
    // i.e. the swapped powers used here (cross-checked numerically through
    // the norm pairings in the quadrature suite)
    cases.push_back({NamedNsTag::E1p,
                     [&](long n) { return -(p.s() * (ab * qp(n) - qp(-n))); },
                     [&](long n) { return -(ab * qp(n) - qp(-n)); },
                     [](long n) { return -n; }, [](long n) { return n + 1; }, false});
    cases.push_back({NamedNsTag::E1m,
                     [&](long n) { return -(p.s().inverse() * (cd / p.q() * qp(n) - qp(-n))); },
                     [&](long n) { return -(cd / p.q() * qp(n) - qp(-n)); },
                     [](long n) { return -n; }, [](long n) { return n + 1; }, false});
    cases.push_back({NamedNsTag::E2p,
                     [&](long n) { return -(ac / p.q() * qp(n) - qp(-n)); },
                     [&](long n) { return -(ac / p.q() * qp(n) - qp(-n)); },
                     [](long n) { return -n; }, [](long n) { return n; }, true});
    cases.push_back({NamedNsTag::E2m,
                     [&](long n) { return -(bd / p.q() * qp(n) - qp(-n)); },
                     [&](long n) { return -(bd / p.q() * qp(n) - qp(-n)); },
                     [](long n) { return -n; }, [](long n) { return n; }, true});

    for (const auto& cs : cases) {
        DiffReflOp op = build_named_nonsym(p, cs.tag);
        AWFamily fs(p.shifted(named_ns_shift(cs.tag)));
        INFO(named_ns_name(cs.tag));
        for (long n = 0; n <= 6; ++n) {
            // action on E_{-n}
            LaurentPoly lhs = op.apply(fam.E(-n));
            Scalar c = cs.c_neg(n);
            long img = cs.img_neg(n);
            if (c.is_zero())
                CHECK(lhs.is_zero());
            else
                CHECK(lhs.equals(fs.E(img).scaled(c)));
            // action on E_{n+1} (E_n with n >= 1 for the second contiguous family)
            long src = cs.e2_family ? n : n + 1;
            if (src == 0) continue;
            LaurentPoly lhs2 = op.apply(fam.E(src));
            Scalar c2 = cs.c_pos(n);
            long img2 = cs.img_pos(n);
            if (c2.is_zero())
                CHECK(lhs2.is_zero());
            else
                CHECK(lhs2.equals(fs.E(img2).scaled(c2)));
        }
    }
    // the spec's worked examples
    DiffReflOp e2p = build_named_nonsym(p, NamedNsTag::E2p);
    LaurentPoly img = e2p.apply(fam.E(0));
    CHECK(img.equals(LaurentPoly::constant(one - ac / p.q())));
    CHECK(build_named_nonsym(p, NamedNsTag::Gp).apply(fam.E(0)).is_zero());
}

TEST_CASE("named operators satisfy S Y_k = Y_{k+h} S") {
    std::mt19937_64 rng(445);
    ParamSet p = sampled(rng);
    DiffReflOp Yk = build_Y(p);
    for (NamedNsTag t : kNamedNsTags) {
        DiffReflOp s = build_named_nonsym(p, t);
        DiffReflOp Ykh = build_Y(p.shifted(named_ns_shift(t)));
        for (int n = -6; n <= 6; ++n) {
            LaurentPoly f = zpow_rat(n);
            CHECK(s.apply(Yk.apply(f)).equals(Ykh.apply(s.apply(f))));
        }
    }
}

TEST_CASE("shift-zero membership: polynomials in Y commute with Y") {
    ParamSet p = sample_params();
    DahaGens g = build_daha(p);
    DiffReflOp y2p3 = g.Y.compose_plain(g.Y) + g.Yinv.scaled(p.from_int(3));
    for (const DiffReflOp& s : {g.Y, g.Yinv, y2p3}) {
        for (int n = -6; n <= 6; ++n) {
            LaurentPoly f = zpow_rat(n);
            CHECK(s.apply(g.Y.apply(f)).equals(g.Y.apply(s.apply(f))));
        }
    }
}

TEST_CASE("descend diagnostics") {
    std::mt19937_64 rng(446);
    ParamSet p = sampled(rng);
    DiffReflOp z = DiffReflOp::zero(p);
    SUBCASE("diag(G+_{k+e1}, G+_{k+e2}) descends (st)") {
        MatOp2 X = named_ns_matrix(p, NamedNsTag::Gp);
        auto rep = descend_diagnostics(X, BasisKind::Steinberg, Shift::v(1), p);
        CHECK(rep.descends);
    }
    SUBCASE("diag(E13_k, q^{-1/2} E13_{k+e1+e2}) descends (ko)") {
        MatOp2 X = named_ns_matrix(p, NamedNsTag::E2p);
        auto rep = descend_diagnostics(X, BasisKind::Koornwinder, -Shift::v(3), p);
        CHECK(rep.descends);
        // with the q^{-1} scale of the spec's inline example instead of
        // q^{-1/2} the matrix does NOT descend
        MatOp2 Xbad = X;
        Xbad.e[3] = X.at(1, 1).scaled(p.s().inverse());
        auto repbad = descend_diagnostics(Xbad, BasisKind::Koornwinder, -Shift::v(3), p);
        CHECK(!repbad.descends);
    }
    SUBCASE("scaled diagonal fails the necessary condition") {
        MatOp2 X = named_ns_matrix(p, NamedNsTag::Gp);
        X.e[3] = X.at(1, 1).scaled(p.from_int(2));
        auto rep = descend_diagnostics(X, BasisKind::Steinberg, Shift::v(1), p);
        CHECK(!rep.necessary_ok);
        CHECK(!rep.descends);
    }
    SUBCASE("the two non-diagonal families descend (st, i = 3, 4)") {
        ParamSet p1 = p.shifted(Shift::eps(1)), p2 = p.shifted(Shift::eps(2));
        Scalar q = p.q(), a = p.a(), b = p.b(), one = p.from_int(1);
        struct Fam {
            FundamentalTag e2i, e1i;
        };
        // the (0,0) resp. (1,1) coefficients as displayed fail the
        // necessary condition; the condition forces them to q(a-b) resp.
        // q(b-a), and with those the full diagnostics pass
        for (auto [e2i, e1i] : {Fam{FundamentalTag::E23, FundamentalTag::E13},
                                Fam{FundamentalTag::E24, FundamentalTag::E14}}) {
            Shift h = fundamental_shift(e2i);
            MatOp2 A{{build_fundamental(p1, e2i).scaled(q * (a - b)), z,
                      build_fundamental(p1, e1i).scaled(b * (q - one)),
                      build_fundamental(p2, e2i).scaled(a * q - b)}};
            auto repA = descend_diagnostics(A, BasisKind::Steinberg, h, p);
            CHECK(repA.descends);
            Shift h2 = fundamental_shift(e1i);
            MatOp2 B{{build_fundamental(p1, e1i).scaled(b * q - a),
                      build_fundamental(p2, e2i).scaled(a * (q - one)), z,
                      build_fundamental(p2, e1i).scaled(q * (b - a))}};
            auto repB = descend_diagnostics(B, BasisKind::Steinberg, h2, p);
            CHECK(repB.descends);
            MatOp2 Adisp{{build_fundamental(p1, e2i).scaled(a - b), z,
                          build_fundamental(p1, e1i).scaled(b * (q - one)),
                          build_fundamental(p2, e2i).scaled(a * q - b)}};
            CHECK(!descend_diagnostics(Adisp, BasisKind::Steinberg, h, p).necessary_ok);
        }
    }
    SUBCASE("ko route of the backward operator exercises the eigenvector branch") {
        // Gm has h.v1 = -1 < 0; its K-matrix K_{ij} = Binv_i o Gm o row_j
        // must consist of symmetric difference operators and descend,
        // including the (1,0)-eigenvector condition.
        Shift h = -Shift::v(1);
        DiffReflOp gm = build_named_nonsym(p, NamedNsTag::Gm);
        ParamSet ph = p.shifted(h);
        auto ko_w = [](const ParamSet& q) {
            LaurentPoly w(Tower::Rational);
            w.add_term(-1, q.from_int(1));
            w.add_term(0, -(q.a() + q.b()));
            w.add_term(1, q.a() * q.b());
            return w;
        };
        LaurentPoly den(Tower::Rational);
        den.add_term(1, p.from_int(1));
        den.add_term(-1, p.from_int(-1));
        LaurentPoly wh = ko_w(ph);
        LaurentPoly dkenh = den.scaled(ph.a() * ph.b() - p.from_int(1));
        DiffReflOp binv0(ph), binv1(ph);
        binv0.set_plain(0, RatFunc(-wh.bar(), dkenh));
        binv0.set_refl(0, RatFunc(wh, dkenh));
        binv1.set_plain(0, RatFunc(LaurentPoly::constant(p.from_int(1)), dkenh));
        binv1.set_refl(0, RatFunc(LaurentPoly::constant(p.from_int(-1)), dkenh));
        DiffReflOp row0 = DiffReflOp::identity(p);
        DiffReflOp row1 = DiffReflOp::mult_op(p, RatFunc(ko_w(p)));
        // the raw compositions carry reflection layers that vanish on A_0;
        // fold them away to reach the symmetric-difference normal form
        MatOp2 K{{binv0.compose_plain(gm).compose_plain(row0).folded(),
                  binv0.compose_plain(gm).compose_plain(row1).folded(),
                  binv1.compose_plain(gm).compose_plain(row0).folded(),
                  binv1.compose_plain(gm).compose_plain(row1).folded()}};
        for (const auto& entry : K.e) CHECK(entry.is_symmetric());
        auto rep = descend_diagnostics(K, BasisKind::Koornwinder, h, p);
        CHECK(rep.descends);
    }
}

TEST_CASE("matrix Y decompositions") {
    std::mt19937_64 rng(447);
    for (int sample = 0; sample < 3; ++sample) {
        ParamSet p = sampled(rng);
        CHECK(matrix_Y_identity_check(p, BasisKind::Steinberg, 6).pass);
        CHECK(matrix_Y_identity_check(p, BasisKind::Koornwinder, 6).pass);
    }
}

TEST_CASE("conjugated Y reproduces the Y-eigenvalues on the matrix columns") {
    std::mt19937_64 rng(448);
    ParamSet p = sampled(rng);
    // (V^-1 B^-1 Y B V) (V^-1 cols of E_st,m) = eigenvalue * columns
    for (long m = 0; m <= 3; ++m) {
        MatrixFamilies fams = build_matrix_families(BasisKind::Steinberg, p, m);
        MatScalar2 vinv = v_matrix_inverse(p);
        DiffReflOp Y = build_Y(p);
        for (int col = 0; col < 2; ++col) {
            VecPoly2 c{fams.E.at(0, col), fams.E.at(1, col)};
            VecPoly2 w = matvec(vinv, c);
            long idx = col == 0 ? -m : m + 1;
            Scalar lam = AWFamily::y_eigenvalue(p, idx);
            // check through the scalar operator route
            LaurentPoly e = basis_compose(c, BasisKind::Steinberg, p);
            CHECK(Y.apply(e).equals(e.scaled(lam)));
            (void)w;
        }
    }
}

TEST_CASE("restrictions to the symmetric subring") {
    std::mt19937_64 rng(449);
    ParamSet p = sampled(rng);
    Scalar one = p.from_int(1);
    // E2+ -> E13 and E2- -> E24 with prefactor 1
    CHECK(restriction_check(build_named_nonsym(p, NamedNsTag::E2p),
                            build_fundamental(p, FundamentalTag::E13), one, 6)
              .pass);
    CHECK(restriction_check(build_named_nonsym(p, NamedNsTag::E2m),
                            build_fundamental(p, FundamentalTag::E24), one, 6)
              .pass);
    // Gp -> q^{-1/2} G+, E1- -> q^{-1/2} E34
    CHECK(restriction_check(build_named_nonsym(p, NamedNsTag::Gp),
                            build_fundamental(p, FundamentalTag::Gplus), p.s().inverse(), 6)
              .pass);
    CHECK(restriction_check(build_named_nonsym(p, NamedNsTag::E1m),
                            build_fundamental(p, FundamentalTag::E34), p.s().inverse(), 6)
              .pass);
    // Gm and E1+ do not preserve A_0
    CHECK(restriction_fails_check(build_named_nonsym(p, NamedNsTag::Gm)).pass);
    CHECK(restriction_fails_check(build_named_nonsym(p, NamedNsTag::E1p)).pass);
    // the worked example: Gp (z + z^-1) = q^{-1/2}(q^{1/2} - q^{-1/2})
    LaurentPoly img = build_named_nonsym(p, NamedNsTag::Gp).apply(sym_monomial(Tower::Rational, 1));
    CHECK(img.equals(
        LaurentPoly::constant(p.s().inverse() * (p.s() - p.s().inverse()))));
}

TEST_CASE("Rodrigues recursion reproduces build_E") {
    std::mt19937_64 rng(450);
    ParamSet p = sampled(rng);
    AWFamily fam(p);
    for (long n = 0; n <= 4; ++n) {
        auto [em, ep] = rodrigues_E(p, n);
        CHECK(em.equals(fam.E(-n)));
        CHECK(ep.equals(fam.E(n + 1)));
    }
}
