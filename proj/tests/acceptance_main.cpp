// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "awshift/cliapp.hpp"
#include "awshift/quadrature.hpp"

using namespace awshift;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(const std::string& name, double time_budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (time_budget_s > 0 && secs > time_budget_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget ") +
                  std::to_string(time_budget_s) + "s";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << secs << "s)"
              << (detail.empty() ? "" : std::string("  [") + detail + "]") << std::endl;
    if (!ok) ++g_failures;
}

ParamSet sample_rational(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 20; ++attempt) {
        ParamSet p = ParamSet::random_rational(rng);
        try {
            AWFamily fam(p);
            fam.E(3);
            fam.E(-3);
            fam.P(3);
            return p;
        } catch (const DegenerateParameterError&) {
        } catch (const EigenvalueCollisionError&) {
        }
    }
    throw DegenerateParameterError("no generic sample");
}

LaurentPoly zn(int n) { return LaurentPoly::zpow(Tower::Rational, n); }

LaurentPoly sym_mono(int n) {
    LaurentPoly f = zn(n);
    if (n) f = f + zn(-n);
    return f;
}

} // namespace

int main() {
    set_precision(128);
    std::cout << "acceptance suite (precision 128, seed 42)" << std::endl;

    // 1. DAHA relations: all four quadratic relations exactly on z^n,
    //    |n| <= 6, at 3 seeded RationalSpecialized samples; < 10 s
    criterion("1 DAHA quadratic and cross relations", 10, [&](std::string& detail) {
        std::mt19937_64 rng(42);
        for (int s = 0; s < 3; ++s) {
            ParamSet p = sample_rational(rng);
            DahaGens g = build_daha(p);
            DiffReflOp q0 = g.T0.compose_plain(g.T0) -
                            g.T0.scaled(p.tau0() - p.tau0().inverse()) -
                            DiffReflOp::identity(p);
            DiffReflOp q1 = g.T1.compose_plain(g.T1) -
                            g.T1.scaled(p.tau1() - p.tau1().inverse()) -
                            DiffReflOp::identity(p);
            DiffReflOp t0zi = g.T0.compose_plain(g.Zinv);
            DiffReflOp t1z = g.T1.compose_plain(g.Z);
            Scalar m0 = p.tt0().inverse() / p.s(), p0 = p.tt0() / p.s();
            DiffReflOp r0 = t0zi.compose_plain(t0zi) - t0zi.scaled(m0 - p0) -
                            DiffReflOp::const_op(p, m0 * p0);
            Scalar m1 = p.tt1().inverse(), p1 = p.tt1();
            DiffReflOp r1 = t1z.compose_plain(t1z) - t1z.scaled(m1 - p1) -
                            DiffReflOp::const_op(p, m1 * p1);
            for (int n = -6; n <= 6; ++n) {
                if (!q0.apply(zn(n)).is_zero() || !q1.apply(zn(n)).is_zero() ||
                    !r0.apply(zn(n)).is_zero() || !r1.apply(zn(n)).is_zero()) {
                    detail = "relation fails at sample " + std::to_string(s);
                    return false;
                }
            }
        }
        return true;
    });

    // 2. Eigen-structure up to 8, both constructions agree; < 30 s
    criterion("2 eigen structure and dual construction", 30, [&](std::string& detail) {
        std::mt19937_64 rng(43);
        ParamSet p = sample_rational(rng);
        DahaGens g = build_daha(p);
        AWFamily cre(p, EConstruction::CreationRecursion);
        AWFamily tri(p, EConstruction::TriangularEigen);
        for (long n = -8; n <= 8; ++n) {
            LaurentPoly e = cre.E(n);
            if (!g.Y.apply(e).equals(e.scaled(AWFamily::y_eigenvalue(p, n)))) {
                detail = "Y eigen fails at n = " + std::to_string(n);
                return false;
            }
            if (!e.equals(tri.E(n))) {
                detail = "construction mismatch at n = " + std::to_string(n);
                return false;
            }
        }
        for (long m = 0; m <= 8; ++m) {
            LaurentPoly pm = cre.P(m);
            if (!g.L.apply(pm).equals(pm.scaled(AWFamily::l_eigenvalue(p, m)))) {
                detail = "L eigen fails at m = " + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    // 3. NLO oracle to n <= 8
    criterion("3 next-to-leading coefficient oracle", 0, [&](std::string& detail) {
        std::mt19937_64 rng(44);
        ParamSet p = sample_rational(rng);
        AWFamily fam(p);
        for (long n = 0; n <= 8; ++n) {
            if (!fam.E(n + 1).coeff(static_cast<int>(-n)).equals(AWFamily::nlo_c(p, n + 1)) ||
                !fam.E(-n).coeff(static_cast<int>(n)).equals(AWFamily::nlo_ctilde(p, n))) {
                detail = "mismatch at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    // 4. Fundamental shift actions (symmetric table) and the twelve named
    //    non-symmetric action formulas, n, m <= 6
    criterion("4 shift operator action formulas", 0, [&](std::string& detail) {
        std::mt19937_64 rng(45);
        ParamSet p = sample_rational(rng);
        for (FundamentalTag t : kFundamentalTags) {
            auto rep = verify_shift_action(build_fundamental(p, t), 6);
            if (!rep.pass) {
                detail = std::string(fundamental_name(t)) + ": " + rep.message;
                return false;
            }
        }
        // explicit displayed constants for the three generating cases
        AWFamily fam(p);
        {
            AWFamily fs(p.shifted(Shift::v(1)));
            for (long m = 1; m <= 6; ++m) {
                Scalar c = p.s().pow(m) - p.s().pow(-m);
                if (!build_fundamental(p, FundamentalTag::Gplus)
                         .apply(fam.P(m))
                         .equals(fs.P(m - 1).scaled(c))) {
                    detail = "G+ action";
                    return false;
                }
            }
        }
        {
            AWFamily fs(p.shifted(-Shift::v(1)));
            Scalar lead = p.a() * p.b() * p.c() * p.d() / p.q().pow(2);
            for (long m = 0; m <= 6; ++m) {
                Scalar c = p.s().inverse() * (lead * p.s().pow(m) - p.s().pow(-m));
                if (!build_fundamental(p, FundamentalTag::Gminus)
                         .apply(fam.P(m))
                         .equals(fs.P(m + 1).scaled(c))) {
                    detail = "G- action";
                    return false;
                }
            }
        }
        {
            AWFamily fs(p.shifted(-Shift::v(2)));
            for (long m = 0; m <= 6; ++m) {
                Scalar c = -(p.a() * p.b() / p.q() * p.s().pow(m) - p.s().pow(-m));
                if (!build_fundamental(p, FundamentalTag::E12)
                         .apply(fam.P(m))
                         .equals(fs.P(m).scaled(c))) {
                    detail = "E12 action";
                    return false;
                }
            }
        }
        // the twelve non-symmetric formulas
        Scalar ab = p.a() * p.b(), cd = p.c() * p.d(), ac = p.a() * p.c(),
               bd = p.b() * p.d();
        Scalar abcd = ab * cd;
        auto qp = [&](long j) { return p.s().pow(j); };
        struct Case {
            NamedNsTag tag;
            std::function<Scalar(long)> c_neg, c_pos;
            std::function<long(long)> i_neg, i_pos;
            bool e2;
        };
        std::vector<Case> cases;
        cases.push_back({NamedNsTag::Gp,
                         [&](long n) { return p.s().inverse() * (qp(n) - qp(-n)); },
                         [&](long n) { return qp(n) - qp(-n); },
                         [](long n) { return 1 - n; }, [](long n) { return n; }, false});
        cases.push_back(
            {NamedNsTag::Gm, [&](long n) { return abcd / p.q() * qp(n) - qp(-n); },
             [&](long n) { return p.s().inverse() * (abcd / p.q() * qp(n) - qp(-n)); },
             [](long n) { return -n - 1; }, [](long n) { return n + 2; }, false});
        cases.push_back({NamedNsTag::E1p,
                         [&](long n) { return -(p.s() * (ab * qp(n) - qp(-n))); },
                         [&](long n) { return -(ab * qp(n) - qp(-n)); },
                         [](long n) { return -n; }, [](long n) { return n + 1; }, false});
        cases.push_back(
            {NamedNsTag::E1m,
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
            for (long n = 0; n <= 6; ++n) {
                LaurentPoly lhs = op.apply(fam.E(-n));
                Scalar c = cs.c_neg(n);
                bool ok = c.is_zero() ? lhs.is_zero() : lhs.equals(fs.E(cs.i_neg(n)).scaled(c));
                long src = cs.e2 ? n : n + 1;
                if (ok && src != 0) {
                    LaurentPoly lhs2 = op.apply(fam.E(src));
                    Scalar c2 = cs.c_pos(n);
                    ok = c2.is_zero() ? lhs2.is_zero()
                                      : lhs2.equals(fs.E(cs.i_pos(n)).scaled(c2));
                }
                if (!ok) {
                    detail = std::string(named_ns_name(cs.tag)) + " at n = " +
                             std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    // 5. Symbol algebra: table values, 64-pair multiplicativity, commutation
    //    exponents, and the composition identity
    criterion("5 symbol algebra", 0, [&](std::string& detail) {
        std::mt19937_64 rng(46);
        ParamSet p = sample_rational(rng);
        for (FundamentalTag t : kFundamentalTags) {
            if (!eta_symbol(build_fundamental(p, t), fundamental_shift(t))
                     .equals(eta_table(p, t))) {
                detail = std::string("eta table ") + fundamental_name(t);
                return false;
            }
        }
        if (!eta_symbol(build_L(p), Shift::zero()).equals(eta_L_table(p))) {
            detail = "eta(L)";
            return false;
        }
        for (FundamentalTag t1 : kFundamentalTags) {
            for (FundamentalTag t2 : kFundamentalTags) {
                DiffReflOp comp =
                    compose_graded(build_fundamental(p, t1), build_fundamental(p, t2));
                Shift h = fundamental_shift(t1) + fundamental_shift(t2);
                if (!eta_symbol(comp, h).equals(
                        symbol_mul(eta_table(p, t1), eta_table(p, t2), p))) {
                    detail = std::string("multiplicativity ") + fundamental_name(t1) + " o " +
                             fundamental_name(t2);
                    return false;
                }
                Shift v = fundamental_shift(t1), w = fundamental_shift(t2);
                if (!(v + w).is_zero()) {
                    Rat s2 = w.dot_v(1) - v.dot_v(1); // 2s = v1.(w - v)
                    DiffReflOp rhs =
                        compose_graded(build_fundamental(p, t2), build_fundamental(p, t1));
                    if (!comp.equals(rhs.scaled(p.s().pow(rat_to_long(s2))))) {
                        detail = "commutation exponent";
                        return false;
                    }
                }
            }
        }
        Scalar u[5] = {Scalar(), p.a(), p.b(), p.c(), p.d()};
        struct Pr {
            FundamentalTag l, r;
            int i, j, k, m;
        };
        for (const auto& pr : {Pr{FundamentalTag::E12, FundamentalTag::E34, 1, 2, 3, 4},
                               Pr{FundamentalTag::E34, FundamentalTag::E12, 3, 4, 1, 2},
                               Pr{FundamentalTag::E13, FundamentalTag::E24, 1, 3, 2, 4},
                               Pr{FundamentalTag::E14, FundamentalTag::E23, 1, 4, 2, 3}}) {
            DiffReflOp comp =
                compose_graded(build_fundamental(p, pr.l), build_fundamental(p, pr.r));
            Scalar cst = u[pr.k] * u[pr.m] / p.q() + u[pr.i] * u[pr.j];
            if (!comp.equals(build_L(p).scaled(p.q_kv1()) - DiffReflOp::const_op(p, cst))) {
                detail = "composition identity";
                return false;
            }
        }
        return true;
    });

    // 6. Matrix level: E = V P V^-1 C_st (m <= 5), E = P C_ko (1 <= m <= 5),
    //    exact V-similarity of W_st, both matrix-Y decompositions (deg <= 6),
    //    Rodrigues to n <= 4
    criterion("6 matrix level identities", 0, [&](std::string& detail) {
        std::mt19937_64 rng(47);
        ParamSet p = sample_rational(rng);
        auto mul_ms = [](const MatPoly2& m, const MatScalar2& a) {
            MatPoly2 r = m;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    r.at(i, j) =
                        m.at(i, 0).scaled(a.at(0, j)) + m.at(i, 1).scaled(a.at(1, j));
            return r;
        };
        auto mul_sm = [](const MatScalar2& a, const MatPoly2& m) {
            MatPoly2 r = m;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    r.at(i, j) =
                        m.at(0, j).scaled(a.at(i, 0)) + m.at(1, j).scaled(a.at(i, 1));
            return r;
        };
        CMatrix cst = c_matrix(BasisKind::Steinberg, p);
        for (long m = 0; m <= 5; ++m) {
            MatrixFamilies fams = build_matrix_families(BasisKind::Steinberg, p, m);
            MatPoly2 rhs = mul_ms(mul_ms(mul_sm(v_matrix(p), fams.P), v_matrix_inverse(p)),
                                  cst.eval_qhalf(p, m));
            if (!fams.E.equals(rhs)) {
                detail = "Steinberg relation at m = " + std::to_string(m);
                return false;
            }
        }
        CMatrix cko = c_matrix(BasisKind::Koornwinder, p);
        for (long m = 1; m <= 5; ++m) {
            MatrixFamilies fams = build_matrix_families(BasisKind::Koornwinder, p, m);
            if (!fams.E.equals(mul_ms(fams.P, cko.eval_qhalf(p, m)))) {
                detail = "Koornwinder relation at m = " + std::to_string(m);
                return false;
            }
        }
        {
            MatrixWeight w = matrix_weight(BasisKind::Steinberg, p);
            MatScalar2 V = v_matrix(p);
            MatScalar2 Vt{{V.at(0, 0), V.at(1, 0), V.at(0, 1), V.at(1, 1)}};
            MatPoly2 conj = mul_ms(mul_sm(Vt, w.factor), v_matrix_star(p));
            auto symq = [&](const Scalar& uu) {
                LaurentPoly f(Tower::Rational);
                f.add_term(0, p.from_int(1) + uu * uu);
                f.add_term(1, -uu);
                f.add_term(-1, -uu);
                return f;
            };
            Scalar half_amb = (p.a() - p.b()) * p.from_rat(rat(1, 2));
            bool ok = conj.at(0, 1).is_zero() && conj.at(1, 0).is_zero() &&
                      conj.at(0, 0).equals(symq(p.a()).scaled(half_amb / p.a())) &&
                      conj.at(1, 1).equals(symq(p.b()).scaled(-(half_amb / p.b())));
            if (!ok) {
                detail = "V-similarity of the Steinberg weight";
                return false;
            }
        }
        if (!matrix_Y_identity_check(p, BasisKind::Steinberg, 6).pass ||
            !matrix_Y_identity_check(p, BasisKind::Koornwinder, 6).pass) {
            detail = "matrix-Y decomposition";
            return false;
        }
        AWFamily fam(p);
        for (long n = 0; n <= 4; ++n) {
            auto [em, ep] = rodrigues_E(p, n);
            if (!em.equals(fam.E(-n)) || !ep.equals(fam.E(n + 1))) {
                detail = "Rodrigues at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    // 7. Norms, numeric at 128 digits: orthogonality < 1e-100 (|m|,|n| <= 4),
    //    closed and normalized forms < 1e-80 (n <= 4), five recursion
    //    families < 1e-80; < 5 min
    criterion("7 norms (numeric)", 300, [&](std::string& detail) {
        ParamSet p = ParamSet::default_numeric();
        NumReport orth = verify_orthogonality(p, 4, pow10(-100));
        NumReport nrm = verify_norms(p, 4, pow10(-80));
        for (const auto& c : orth.checks)
            if (!c.pass) {
                detail = c.name + " residual " + c.residual.str(4);
                return false;
            }
        for (const auto& c : nrm.checks)
            if (!c.pass) {
                detail = c.name + " residual " + c.residual.str(4);
                return false;
            }
        return true;
    });

    // 8. Adjoints, numeric: dagger/star tables and the six named prefactors
    //    to < 1e-80 on polynomials of degree <= 4; Phi conjugation at 16
    //    circle points to < 1e-60
    criterion("8 adjoints (numeric)", 600, [&](std::string& detail) {
        ParamSet p = ParamSet::default_numeric();
        NumReport rep = verify_adjoints_numeric(p, 4, pow10(-80), pow10(-60));
        for (const auto& c : rep.checks)
            if (!c.pass) {
                detail = c.name + " residual " + c.residual.str(4);
                return false;
            }
        return true;
    });

    // 9. Specialisation: every displayed q -> 1 limit exactly on |n| <= 6
    criterion("9 q -> 1 specialisation (exact)", 0, [&](std::string& detail) {
        LimitReport rep = verify_specialisation(6);
        for (const auto& c : rep.checks)
            if (!c.pass) {
                detail = c.name + (c.detail.empty() ? "" : ": " + c.detail);
                return false;
            }
        return true;
    });

    // 10. Determinism: verify-all twice with the same seed gives
    //     byte-identical JSON
    criterion("10 deterministic reports", 0, [&](std::string& detail) {
        RunConfig cfg;
        cfg.seed = 42;
        cfg.precision = 48;
        cfg.nmax = 1;
        cfg.degree = 4;
        std::ostringstream sink1, sink2;
        std::string json1, json2;
        int rc1 = cmd_verify(cfg, "all", sink1, &json1);
        int rc2 = cmd_verify(cfg, "all", sink2, &json2);
        set_precision(128);
        if (rc1 != 0 || rc2 != 0) {
            detail = "verify-all exit codes " + std::to_string(rc1) + ", " +
                     std::to_string(rc2);
            return false;
        }
        if (json1 != json2) {
            detail = "reports differ";
            return false;
        }
        if (json1.empty()) {
            detail = "empty report";
            return false;
        }
        return true;
    });

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << (10 - g_failures) << "/10)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
