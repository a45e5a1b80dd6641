#include "awshift/ops.hpp"

#include <sstream>

#include "awshift/daha.hpp"

namespace awshift {

Scalar Symbol::eval_qhalf(const ParamSet& p, long m) const {
    Scalar acc = Scalar::from_int(0, p.tower());
    Scalar t = p.s().pow(m); // T = q^{m/2} = s^m
    for (const auto& [n, c] : tpoly) acc += c * t.pow(n);
    return acc;
}

Symbol Symbol::arg_scaled(const Scalar& zeta) const {
    Symbol r;
    r.h = h;
    for (const auto& [n, c] : tpoly) {
        Scalar nc = c * zeta.pow(n);
        if (!nc.is_zero()) r.tpoly[n] = nc;
    }
    return r;
}

Symbol Symbol::scaled(const Scalar& c) const {
    Symbol r;
    r.h = h;
    if (c.is_zero()) return r;
    for (const auto& [n, x] : tpoly) r.tpoly[n] = x * c;
    return r;
}

bool Symbol::equals(const Symbol& o) const {
    if (h != o.h) return false;
    auto keys = tpoly;
    for (const auto& [n, c] : o.tpoly) {
        auto it = keys.find(n);
        if (it == keys.end()) return false;
        if (!it->second.equals(c)) return false;
        keys.erase(it);
    }
    return keys.empty();
}

std::string Symbol::str() const {
    std::ostringstream os;
    os << "t^" << h.str() << " * (";
    bool first = true;
    for (const auto& [n, c] : tpoly) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (n != 0) os << "*T^" << n;
    }
    if (first) os << "0";
    os << ")";
    return os.str();
}

DiffReflOp DiffReflOp::identity(const ParamSet& p) {
    DiffReflOp op(p);
    op.set_plain(0, RatFunc::constant(Scalar::from_int(1, p.tower())));
    return op;
}

DiffReflOp DiffReflOp::t_pow(const ParamSet& p, int n) {
    DiffReflOp op(p);
    op.set_plain(n, RatFunc::constant(Scalar::from_int(1, p.tower())));
    return op;
}

DiffReflOp DiffReflOp::s1_op(const ParamSet& p) {
    DiffReflOp op(p);
    op.set_refl(0, RatFunc::constant(Scalar::from_int(1, p.tower())));
    return op;
}

DiffReflOp DiffReflOp::s0_op(const ParamSet& p) {
    DiffReflOp op(p);
    op.set_refl(-2, RatFunc::constant(Scalar::from_int(1, p.tower())));
    return op;
}

DiffReflOp DiffReflOp::mult_op(const ParamSet& p, const RatFunc& f) {
    DiffReflOp op(p);
    op.set_plain(0, f);
    return op;
}

DiffReflOp DiffReflOp::const_op(const ParamSet& p, const Scalar& c) {
    DiffReflOp op(p);
    op.set_plain(0, RatFunc::constant(c));
    return op;
}

DiffReflOp DiffReflOp::with_shift(const Shift& h) const {
    DiffReflOp r = *this;
    r.shift_ = h;
    return r;
}

DiffReflOp DiffReflOp::with_rebuild(OpBuilder b) const {
    DiffReflOp r = *this;
    r.rebuild_ = std::move(b);
    return r;
}

DiffReflOp DiffReflOp::rebuilt_at(const ParamSet& p) const {
    if (!rebuild_) throw ProvenanceError("operator has no rebuild recipe");
    return rebuild_(p);
}

void DiffReflOp::set_plain(int n, const RatFunc& c) {
    if (c.is_zero())
        plain_.erase(n);
    else
        plain_[n] = c;
}

void DiffReflOp::set_refl(int n, const RatFunc& c) {
    if (c.is_zero())
        refl_.erase(n);
    else
        refl_[n] = c;
}

RatFunc DiffReflOp::plain_coeff(int n) const {
    auto it = plain_.find(n);
    return it == plain_.end() ? RatFunc::zero(params_.tower()) : it->second;
}

RatFunc DiffReflOp::refl_coeff(int n) const {
    auto it = refl_.find(n);
    return it == refl_.end() ? RatFunc::zero(params_.tower()) : it->second;
}

LaurentPoly DiffReflOp::apply(const LaurentPoly& f) const {
    Tower t = params_.tower();
    RatFunc acc = RatFunc::zero(t);
    const Scalar s = params_.s();
    for (const auto& [n, c] : plain_) {
        LaurentPoly tf = f.subst_scale(s.pow(n));
        acc = acc + c * RatFunc(tf);
    }
    if (!refl_.empty()) {
        LaurentPoly g = f.bar();
        for (const auto& [n, c] : refl_) {
            LaurentPoly tf = g.subst_scale(s.pow(n));
            acc = acc + c * RatFunc(tf);
        }
    }
    return exact_divide(acc.num(), acc.den());
}

DiffReflOp DiffReflOp::operator+(const DiffReflOp& o) const {
    DiffReflOp r = *this;
    r.rebuild_ = nullptr;
    r.shift_.reset();
    if (shift_ && o.shift_ && *shift_ == *o.shift_) r.shift_ = shift_;
    for (const auto& [n, c] : o.plain_) r.set_plain(n, r.plain_coeff(n) + c);
    for (const auto& [n, c] : o.refl_) r.set_refl(n, r.refl_coeff(n) + c);
    return r;
}

DiffReflOp DiffReflOp::operator-(const DiffReflOp& o) const { return *this + (-o); }

DiffReflOp DiffReflOp::operator-() const {
    DiffReflOp r(params_);
    r.shift_ = shift_;
    for (const auto& [n, c] : plain_) r.plain_[n] = -c;
    for (const auto& [n, c] : refl_) r.refl_[n] = -c;
    return r;
}

DiffReflOp DiffReflOp::scaled(const Scalar& c) const {
    return scaled_rf(RatFunc::constant(c));
}

DiffReflOp DiffReflOp::scaled_rf(const RatFunc& c) const {
    DiffReflOp r(params_);
    r.shift_ = shift_;
    if (c.is_zero()) return r;
    for (const auto& [n, x] : plain_) r.plain_[n] = c * x;
    for (const auto& [n, x] : refl_) r.refl_[n] = c * x;
    return r;
}

DiffReflOp DiffReflOp::compose_plain(const DiffReflOp& o) const {
    const Scalar s = params_.s();
    DiffReflOp r(o.params_);
    auto emit = [&](int n, const RatFunc& c, bool is_refl) {
        if (is_refl)
            r.set_refl(n, r.refl_coeff(n) + c);
        else
            r.set_plain(n, r.plain_coeff(n) + c);
    };
    auto handle = [&](int a, const RatFunc& ca, bool ea) {
        // (ca(z) T^a s1^{ea}) * (cb(z) T^b s1^{eb})
        for (const auto& [b, cb] : o.plain_) {
            if (!ea)
                emit(a + b, ca * cb.subst_scale(s.pow(a)), false);
            else
                emit(a - b, ca * cb.bar().subst_scale(s.pow(a)), true);
        }
        for (const auto& [b, cb] : o.refl_) {
            if (!ea)
                emit(a + b, ca * cb.subst_scale(s.pow(a)), true);
            else
                emit(a - b, ca * cb.bar().subst_scale(s.pow(a)), false);
        }
    };
    for (const auto& [a, ca] : plain_) handle(a, ca, false);
    for (const auto& [a, ca] : refl_) handle(a, ca, true);
    return r;
}

bool DiffReflOp::is_symmetric() const {
    if (!refl_.empty()) return false;
    for (const auto& [n, c] : plain_) {
        if (!c.equals(plain_coeff(-n).bar())) return false;
    }
    return true;
}

std::pair<DiffReflOp, DiffReflOp> DiffReflOp::parity_split() const {
    DiffReflOp even(params_), odd(params_);
    even.shift_ = shift_;
    odd.shift_ = shift_;
    for (const auto& [n, c] : plain_) (n % 2 == 0 ? even : odd).plain_[n] = c;
    for (const auto& [n, c] : refl_) (n % 2 == 0 ? even : odd).refl_[n] = c;
    return {even, odd};
}

DiffReflOp DiffReflOp::folded() const {
    DiffReflOp r(params_);
    r.shift_ = shift_;
    for (const auto& [n, c] : plain_) r.set_plain(n, c);
    for (const auto& [n, c] : refl_) r.set_plain(n, r.plain_coeff(n) + c);
    return r;
}

bool DiffReflOp::equals(const DiffReflOp& o) const {
    auto cmp = [](const std::map<int, RatFunc>& x, const std::map<int, RatFunc>& y) {
        for (const auto& [n, c] : x) {
            auto it = y.find(n);
            if (it == y.end()) {
                if (!c.is_zero()) return false;
            } else if (!c.equals(it->second)) {
                return false;
            }
        }
        for (const auto& [n, c] : y) {
            if (x.find(n) == x.end() && !c.is_zero()) return false;
        }
        return true;
    };
    return cmp(plain_, o.plain_) && cmp(o.plain_, plain_) && cmp(refl_, o.refl_) &&
           cmp(o.refl_, refl_);
}

std::string DiffReflOp::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : plain_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        if (n != 0) os << "*T^" << n;
    }
    for (const auto& [n, c] : refl_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        if (n != 0) os << "*T^" << n;
        os << "*s1";
    }
    if (first) os << "0";
    return os.str();
}

DiffReflOp compose_graded(const DiffReflOp& s1, const DiffReflOp& s2) {
    if (!s1.shift() || !s2.shift())
        throw Error("graded composition needs operators with known shifts");
    Shift h1 = *s1.shift(), h2 = *s2.shift();
    DiffReflOp left = s1.rebuilt_at(s2.params().shifted(h2));
    DiffReflOp r = left.compose_plain(s2).with_shift(h1 + h2);
    OpBuilder rb1 = s1.rebuild(), rb2 = s2.rebuild();
    if (rb1 && rb2) {
        r = r.with_rebuild([rb1, rb2](const ParamSet& p) {
            return compose_graded(rb1(p), rb2(p));
        });
    }
    return r;
}

Symbol eta_symbol(const DiffReflOp& s, const Shift& h) {
    return eta_symbol(s, h, s.params());
}

Symbol eta_symbol(const DiffReflOp& s, const Shift& h, const ParamSet& domain) {
    if (!s.is_symmetric())
        throw NotAShiftOperatorError("eta of a non-symmetric operator");
    Rat d = -h.dot_v(1);
    if (!rat_is_int(d))
        throw NotAShiftOperatorError("shift " + h.str() + " has non-integral h.v1");
    long dd = rat_to_long(d);
    Symbol sym;
    sym.h = h;
    for (const auto& [n, c] : s.plain()) {
        int deg = c.deg_infinity();
        if (deg > dd)
            throw NotAShiftOperatorError("coefficient of T^" + std::to_string(n) +
                                         " has z-degree " + std::to_string(deg) +
                                         " > " + std::to_string(dd) +
                                         ": not a shift operator of shift " + h.str());
        if (deg == dd) {
            Scalar lead = c.lead_infinity();
            if (!lead.is_zero()) sym.tpoly[n] = lead;
        }
    }
    if (sym.tpoly.empty())
        throw NotAShiftOperatorError("vanishing symbol at shift " + h.str());
    // Degrees alone cannot tell apart shifts with equal h.v1; the top layer
    // of a genuine shift operator also satisfies the q-difference equation
    //   c_r(z) f_{2,k}(q^{r/2} z) = c_r(qz) f_{2,k+h}(z),
    // which pins h.  Screen with it in the exact towers.
    if (s.params().tower() != Tower::Complex) {
        const ParamSet& p = domain;
        int r = sym.tpoly.rbegin()->first;
        RatFunc cr = s.plain_coeff(r);
        RatFunc lhs = cr * f2_of_L(p).subst_scale(p.s().pow(r));
        RatFunc rhs = cr.subst_scale(p.q()) * f2_of_L(p.shifted(h));
        if (!lhs.equals(rhs))
            throw NotAShiftOperatorError(
                "top layer fails the q-difference equation at shift " + h.str());
    }
    OpBuilder rb = s.rebuild();
    if (rb) {
        sym.rebuild = [rb, h](const ParamSet& p) { return eta_symbol(rb(p), h); };
    }
    return sym;
}

} // namespace awshift
