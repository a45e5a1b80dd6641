#include "awshift/symshift.hpp"

namespace awshift {

const char* fundamental_name(FundamentalTag t) {
    switch (t) {
        case FundamentalTag::Gplus: return "G+";
        case FundamentalTag::Gminus: return "G-";
        case FundamentalTag::E12: return "E12";
        case FundamentalTag::E13: return "E13";
        case FundamentalTag::E14: return "E14";
        case FundamentalTag::E23: return "E23";
        case FundamentalTag::E24: return "E24";
        case FundamentalTag::E34: return "E34";
    }
    return "?";
}

Shift fundamental_shift(FundamentalTag t) {
    switch (t) {
        case FundamentalTag::Gplus: return Shift::v(1);
        case FundamentalTag::Gminus: return -Shift::v(1);
        case FundamentalTag::E12: return -Shift::v(2);
        case FundamentalTag::E13: return -Shift::v(3);
        case FundamentalTag::E14: return -Shift::v(4);
        case FundamentalTag::E23: return Shift::v(4);
        case FundamentalTag::E24: return Shift::v(3);
        case FundamentalTag::E34: return Shift::v(2);
    }
    throw Error("bad tag");
}

namespace {

std::pair<Scalar, Scalar> contiguity_params(const ParamSet& p, FundamentalTag t) {
    switch (t) {
        case FundamentalTag::E12: return {p.a(), p.b()};
        case FundamentalTag::E13: return {p.a(), p.c()};
        case FundamentalTag::E14: return {p.a(), p.d()};
        case FundamentalTag::E23: return {p.b(), p.c()};
        case FundamentalTag::E24: return {p.b(), p.d()};
        case FundamentalTag::E34: return {p.c(), p.d()};
        default: throw Error("not a contiguity operator");
    }
}

// (1 - u q^{-1/2} z)
LaurentPoly lin_factor(const ParamSet& p, const Scalar& u) {
    LaurentPoly f(p.tower());
    f.add_term(0, p.from_int(1));
    f.add_term(1, -(u / p.s()));
    return f;
}

LaurentPoly z_minus_zinv(Tower t) {
    LaurentPoly f(t);
    f.add_term(1, Scalar::from_int(1, t));
    f.add_term(-1, Scalar::from_int(-1, t));
    return f;
}

// S = (A(z) T - A(z^{-1}) T^{-1}) / (z - z^{-1})
DiffReflOp two_term_op(const ParamSet& p, const LaurentPoly& a_poly) {
    LaurentPoly den = z_minus_zinv(p.tower());
    DiffReflOp op(p);
    op.set_plain(1, RatFunc(a_poly, den));
    op.set_plain(-1, RatFunc(-a_poly.bar(), den));
    return op;
}

} // namespace

DiffReflOp build_fundamental(const ParamSet& p, FundamentalTag t) {
    Tower tw = p.tower();
    DiffReflOp op(p);
    switch (t) {
        case FundamentalTag::Gplus: {
            LaurentPoly one = LaurentPoly::constant(Scalar::from_int(1, tw));
            op = two_term_op(p, one);
            break;
        }
        case FundamentalTag::Gminus: {
            // A1(z) = q^{-1/2} z^{-2} (1-aq^{-1/2}z)...(1-dq^{-1/2}z)
            LaurentPoly a1 = lin_factor(p, p.a()) * lin_factor(p, p.b()) *
                             lin_factor(p, p.c()) * lin_factor(p, p.d());
            a1 = (a1 * LaurentPoly::zpow(tw, -2)).scaled(p.s().inverse());
            op = two_term_op(p, a1);
            break;
        }
        default: {
            auto [u, v] = contiguity_params(p, t);
            // A2(z) = -z^{-1} (1-u q^{-1/2} z)(1-v q^{-1/2} z)
            LaurentPoly a2 = lin_factor(p, u) * lin_factor(p, v);
            a2 = -(a2 * LaurentPoly::zpow(tw, -1));
            op = two_term_op(p, a2);
            break;
        }
    }
    return op.with_shift(fundamental_shift(t))
        .with_rebuild([t](const ParamSet& q) { return build_fundamental(q, t); });
}

Symbol eta_table(const ParamSet& p, FundamentalTag t) {
    Symbol sym;
    sym.h = fundamental_shift(t);
    Scalar one = p.from_int(1);
    switch (t) {
        case FundamentalTag::Gplus:
            sym.tpoly[1] = one;
            sym.tpoly[-1] = -one;
            break;
        case FundamentalTag::Gminus: {
            Scalar qinv_half = p.s().inverse();
            Scalar lead = p.a() * p.b() * p.c() * p.d() / p.q().pow(2);
            sym.tpoly[1] = qinv_half * lead;
            sym.tpoly[-1] = -qinv_half;
            break;
        }
        default: {
            auto [u, v] = contiguity_params(p, t);
            sym.tpoly[1] = -(u * v / p.q());
            sym.tpoly[-1] = one;
            break;
        }
    }
    sym.rebuild = [t](const ParamSet& q) { return eta_table(q, t); };
    return sym;
}

Symbol eta_L_table(const ParamSet& p) {
    Symbol sym;
    sym.h = Shift::zero();
    Scalar qk = p.q_kv1();
    sym.tpoly[2] = qk;
    sym.tpoly[-2] = qk.inverse();
    sym.rebuild = [](const ParamSet& q) { return eta_L_table(q); };
    return sym;
}

Symbol symbol_mul(const Symbol& x, const Symbol& y, const ParamSet& p) {
    if (!x.rebuild)
        throw ProvenanceError("left symbol factor has no rebuild recipe for the R-product");
    Symbol xs = x.rebuild(p.shifted(y.h));
    Rat e = y.h.dot_v(1);
    if (!rat_is_int(e)) throw NotAShiftOperatorError("non-integral h'.v1 in symbol product");
    xs = xs.arg_scaled(p.s().pow(-rat_to_long(e)));
    Symbol r;
    r.h = x.h + y.h;
    for (const auto& [n1, c1] : xs.tpoly)
        for (const auto& [n2, c2] : y.tpoly) {
            Scalar c = c1 * c2;
            if (c.is_zero()) continue;
            auto it = r.tpoly.find(n1 + n2);
            if (it == r.tpoly.end())
                r.tpoly[n1 + n2] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) r.tpoly.erase(it);
            }
        }
    auto xr = x.rebuild, yr = y.rebuild;
    if (xr && yr)
        r.rebuild = [xr, yr](const ParamSet& q) { return symbol_mul(xr(q), yr(q), q); };
    return r;
}

Symbol t_symbol(const ParamSet& p, const Shift& h) {
    Symbol sym;
    sym.h = h;
    sym.tpoly[0] = p.from_int(1);
    sym.rebuild = [h](const ParamSet& q) { return t_symbol(q, h); };
    return sym;
}

LaurentPoly omega_poly(const ParamSet& p) {
    Scalar qk = p.q_kv1();
    LaurentPoly w(p.tower());
    w.add_term(2, qk);
    w.add_term(-2, qk.inverse());
    return w;
}

namespace {

LaurentPoly tpoly_to_laurent(const std::map<int, Scalar>& t, Tower tw) {
    LaurentPoly f(tw);
    for (const auto& [n, c] : t) f.add_term(n, c);
    return f;
}

FundamentalTag tag_for(int i, int eps) {
    // the fundamental operator with shift eps*v_i
    switch (i) {
        case 1: return eps > 0 ? FundamentalTag::Gplus : FundamentalTag::Gminus;
        case 2: return eps > 0 ? FundamentalTag::E34 : FundamentalTag::E12;
        case 3: return eps > 0 ? FundamentalTag::E24 : FundamentalTag::E13;
        case 4: return eps > 0 ? FundamentalTag::E23 : FundamentalTag::E14;
    }
    throw Error("bad lattice direction");
}

} // namespace

FactorResult factor_symbol(const Symbol& x, const ParamSet& p, const std::array<int, 3>& order) {
    if (x.is_zero()) throw NotInSpanError("factoring the zero symbol");
    if (!x.h.admissible())
        throw NotInSpanError("shift " + x.h.str() + " outside the v-lattice");
    FactorResult res;
    for (int i = 1; i <= 4; ++i) {
        Rat hv = x.h.dot_v(i);
        res.n[static_cast<size_t>(i - 1)] = std::abs(rat_to_long(hv));
        res.eps[static_cast<size_t>(i - 1)] = hv < 0 ? -1 : 1;
    }
    // ordered product of fundamental symbols: v1-block first, then the
    // requested permutation of the commuting v2, v3, v4 blocks
    std::array<int, 4> peel{1, order[0], order[1], order[2]};
    Symbol prod;
    bool have = false;
    for (int i : peel) {
        long cnt = res.n[static_cast<size_t>(i - 1)];
        int eps = res.eps[static_cast<size_t>(i - 1)];
        for (long j = 0; j < cnt; ++j) {
            Symbol g = eta_table(p, tag_for(i, eps));
            prod = have ? symbol_mul(prod, g, p) : g;
            have = true;
        }
    }
    LaurentPoly f = tpoly_to_laurent(x.tpoly, p.tower());
    LaurentPoly rem;
    if (have) {
        res.product = prod;
        LaurentPoly g = tpoly_to_laurent(prod.tpoly, p.tower());
        try {
            rem = exact_divide(f, g);
        } catch (const NonExactDivisionError& e) {
            throw NotInSpanError(std::string("not in the span of the fundamental symbols: ") +
                                 e.what());
        }
    } else {
        res.product = t_symbol(p, Shift::zero());
        rem = f;
    }
    // write the quotient as a polynomial in omega
    Scalar qk = p.q_kv1();
    LaurentPoly omega = omega_poly(p);
    while (!rem.is_zero()) {
        int mx = rem.max_exp(), mn = rem.min_exp();
        if (mx == 0 && mn == 0) {
            res.y_omega[0] = rem.coeff(0);
            break;
        }
        if (mx <= 0 || mx % 2 != 0 || mn != -mx)
            throw NotInSpanError("quotient is not a polynomial in omega");
        long m = mx / 2;
        Scalar gamma = rem.coeff(mx) / qk.pow(m);
        res.y_omega[m] = gamma;
        LaurentPoly wpow = LaurentPoly::constant(p.from_int(1));
        for (long j = 0; j < m; ++j) wpow = wpow * omega;
        rem = rem - wpow.scaled(gamma);
        if (!rem.is_zero() && rem.max_exp() >= mx)
            throw NotInSpanError("omega reduction failed to lower the degree");
    }
    return res;
}

AdjointImage adjoint_table(const ParamSet& p, FundamentalTag t, AdjointKind which) {
    Scalar one = p.from_int(1);
    auto partner = [](FundamentalTag u) {
        switch (u) {
            case FundamentalTag::Gplus: return FundamentalTag::Gminus;
            case FundamentalTag::Gminus: return FundamentalTag::Gplus;
            case FundamentalTag::E12: return FundamentalTag::E34;
            case FundamentalTag::E34: return FundamentalTag::E12;
            case FundamentalTag::E13: return FundamentalTag::E24;
            case FundamentalTag::E24: return FundamentalTag::E13;
            case FundamentalTag::E14: return FundamentalTag::E23;
            case FundamentalTag::E23: return FundamentalTag::E14;
        }
        throw Error("bad tag");
    };
    FundamentalTag img = partner(t);
    if (which == AdjointKind::Dagger) return {img, one};
    switch (t) {
        case FundamentalTag::Gplus:
            return {img, -(p.q().pow(3) / (p.a() * p.b() * p.c() * p.d()))};
        case FundamentalTag::Gminus: return {img, -one};
        default: {
            auto [uk, ul] = contiguity_params(p, img); // u_k u_l of the partner
            return {img, -(p.q() / (uk * ul))};
        }
    }
}

ShiftActionReport verify_shift_action(const DiffReflOp& s, long mMax) {
    ShiftActionReport rep;
    if (!s.shift()) {
        rep.pass = false;
        rep.message = "operator carries no declared shift";
        return rep;
    }
    const ParamSet& p = s.params();
    Shift h = *s.shift();
    Rat d = h.dot_v(1);
    if (!rat_is_int(d)) {
        rep.pass = false;
        rep.message = "h.v1 not an integer";
        return rep;
    }
    long deg_step = rat_to_long(d);
    Symbol sym = eta_symbol(s, h);
    AWFamily fam_k(p);
    AWFamily fam_kh(p.shifted(h));
    for (long m = 0; m <= mMax; ++m) {
        Scalar c = sym.eval_qhalf(p, m);
        LaurentPoly lhs = s.apply(fam_k.P(m));
        long mp = m - deg_step;
        bool ok;
        if (mp < 0) {
            ok = lhs.is_zero() && c.is_zero();
        } else {
            ok = lhs.equals(fam_kh.P(mp).scaled(c));
        }
        rep.entries.push_back({m, ok, c});
        if (!ok) {
            rep.pass = false;
            rep.message = "mismatch at m = " + std::to_string(m);
        }
    }
    return rep;
}

} // namespace awshift
