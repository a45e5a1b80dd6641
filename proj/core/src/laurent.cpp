#include "awshift/laurent.hpp"

#include <sstream>

namespace awshift {

LaurentPoly LaurentPoly::constant(const Scalar& c) {
    LaurentPoly p(c.tower());
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int n) {
    LaurentPoly p(c.tower());
    p.add_term(n, c);
    return p;
}

LaurentPoly LaurentPoly::from_rat_table(const std::map<int, Rat>& table, Tower t) {
    LaurentPoly p(t);
    for (const auto& [n, c] : table) p.add_term(n, Scalar::from_rat(c, t));
    return p.with_provenance(
        [table](const ParamSet& q) { return LaurentPoly::from_rat_table(table, q.tower()); });
}

Scalar LaurentPoly::coeff(int n) const {
    auto it = c_.find(n);
    if (it == c_.end()) return Scalar::from_int(0, tower_);
    return it->second;
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw Error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw Error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

void LaurentPoly::set_term(int n, const Scalar& c) {
    if (c.is_zero())
        c_.erase(n);
    else
        c_[n] = c;
}

void LaurentPoly::add_term(int n, const Scalar& c) {
    auto it = c_.find(n);
    if (it == c_.end()) {
        if (!c.is_zero()) c_[n] = c;
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) c_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r.prov_ = nullptr;
    for (const auto& [n, c] : o.c_) r.add_term(n, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r.prov_ = nullptr;
    for (const auto& [n, c] : o.c_) r.add_term(n, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(tower_);
    for (const auto& [n1, c1] : c_)
        for (const auto& [n2, c2] : o.c_) r.add_term(n1 + n2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(tower_);
    for (const auto& [n, c] : c_) r.c_[n] = -c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& s) const {
    LaurentPoly r(tower_);
    if (s.is_zero()) return r;
    for (const auto& [n, c] : c_) r.add_term(n, c * s);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r(tower_);
    for (const auto& [n, c] : c_) r.c_[-n] = c;
    return r;
}

LaurentPoly LaurentPoly::subst_scale(const Scalar& zeta) const {
    LaurentPoly r(tower_);
    for (const auto& [n, c] : c_) r.add_term(n, c * zeta.pow(n));
    return r;
}

Scalar LaurentPoly::eval(const Scalar& z) const {
    Scalar acc = Scalar::from_int(0, tower_);
    for (const auto& [n, c] : c_) acc += c * z.pow(n);
    return acc;
}

bool LaurentPoly::equals(const LaurentPoly& o) const {
    return (*this - o).is_zero();
}

bool LaurentPoly::is_symmetric() const { return equals(bar()); }

LaurentPoly LaurentPoly::chopped(const BigFloat& tol) const {
    LaurentPoly r(tower_);
    for (const auto& [n, c] : c_) {
        if (tower_ == Tower::Complex && c.cplx().abs() < tol) continue;
        r.c_[n] = c;
    }
    return r;
}

LaurentPoly LaurentPoly::with_provenance(PolyBuilder b) const {
    LaurentPoly r = *this;
    r.prov_ = std::move(b);
    return r;
}

LaurentPoly LaurentPoly::rebuilt_at(const ParamSet& p) const {
    if (!prov_) throw ProvenanceError("conjugation requires parametric provenance");
    return prov_(p);
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    // deterministic ordering by NonSymmetric rank
    std::map<int, int> by_rank;
    for (const auto& [n, c] : c_) by_rank[ns_rank(n)] = n;
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, n] : by_rank) {
        (void)r;
        const Scalar& c = c_.at(n);
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                   cs.find('+') == std::string::npos;
        if (first) {
            first = false;
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            if (neg) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        bool needs_paren = cs.find(' ') != std::string::npos;
        if (n == 0) {
            os << (needs_paren ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (needs_paren ? "(" + cs + ")" : cs) << "*";
            os << "z";
            if (n != 1) os << "^" << n;
        }
    }
    return os.str();
}

int ns_rank(int n) { return n > 0 ? 2 * n - 1 : -2 * n; }

int ns_exponent_of_rank(int rank) {
    if (rank < 0) throw Error("negative rank");
    if (rank == 0) return 0;
    return rank % 2 ? (rank + 1) / 2 : -rank / 2;
}

LeadingTerm leading_term(const LaurentPoly& f, MonomialOrder ord) {
    if (f.is_zero()) throw Error("leading term of the zero polynomial");
    if (ord == MonomialOrder::NonSymmetric) {
        int best = 0;
        bool init = false;
        for (const auto& [n, c] : f.terms()) {
            (void)c;
            if (!init || ns_rank(n) > ns_rank(best)) {
                best = n;
                init = true;
            }
        }
        return {best, f.coeff(best)};
    }
    if (!f.is_symmetric()) throw Error("Symmetric order on an asymmetric polynomial");
    int m = std::max(std::abs(f.min_exp()), std::abs(f.max_exp()));
    return {m, f.coeff(m)};
}

LaurentPoly involution(const LaurentPoly& f, Involution which, const ParamSet& p) {
    if (which == Involution::Bar) return f.bar();
    LaurentPoly circ(f.tower());
    if (p.mode() == ParamMode::SymbolicGenerators) {
        for (const auto& [n, c] : f.terms())
            circ.set_term(n, Scalar(c.gen().inverted_generators()));
    } else {
        circ = f.rebuilt_at(p.starred());
    }
    if (which == Involution::Circ) return circ;
    return circ.bar();
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& d) {
    if (d.is_zero()) throw DivisionByZeroError("Laurent division by zero polynomial");
    if (f.is_zero()) return LaurentPoly::zero(f.tower());
    Tower t = f.tower();
    // shift both to ordinary polynomials and divide from the top
    int fm = f.min_exp(), dm = d.min_exp();
    int fM = f.max_exp(), dM = d.max_exp();
    int qlo = fm - dm, qhi = fM - dM;
    if (qhi < qlo) {
        if (t == Tower::Complex) {
            // numerically-zero dividend: only rounding junk shorter than the
            // divisor survives the cancellations
            BigFloat tol = pow10(-(static_cast<long>(precision_digits()) - 25));
            bool junk = true;
            for (const auto& [n, c] : f.terms()) {
                (void)n;
                if (c.cplx().abs() > tol) junk = false;
            }
            if (junk) return LaurentPoly::zero(t);
        }
        throw NonExactDivisionError("Laurent division: degree of divisor exceeds dividend");
    }
    LaurentPoly rem = f, quot(t);
    const Scalar dlead = d.coeff(dM);
    for (int k = qhi; k >= qlo; --k) {
        Scalar c = rem.coeff(k + dM);
        if (c.is_zero()) continue;
        Scalar qc = c / dlead;
        quot.set_term(k, qc);
        for (const auto& [n, dc] : d.terms()) rem.add_term(n + k, -(qc * dc));
    }
    bool bad = false;
    if (t == Tower::Complex) {
        // fuzzy acceptance: remainder must be negligible against the inputs
        BigFloat scale(0);
        for (const auto& [n, c] : f.terms()) {
            (void)n;
            scale = std::max(scale, c.cplx().abs());
        }
        if (scale == 0) scale = 1;
        BigFloat tol = scale * pow10(-(static_cast<long>(precision_digits()) - 25));
        for (const auto& [n, c] : rem.terms()) {
            (void)n;
            if (c.cplx().abs() > tol) bad = true;
        }
    } else {
        bad = !rem.is_zero();
    }
    if (bad)
        throw NonExactDivisionError("operator does not preserve A on this input (remainder " +
                                    rem.str() + ")");
    return quot;
}

namespace {

// ordinary-poly gcd for the Rational tower (cheap, keeps coefficients tidy)
LaurentPoly rat_gcd_poly(LaurentPoly a, LaurentPoly b) {
    auto normalize = [](LaurentPoly x) {
        if (x.is_zero()) return x;
        int m = x.min_exp();
        LaurentPoly y(x.tower());
        for (const auto& [n, c] : x.terms()) y.set_term(n - m, c);
        Scalar lead = y.coeff(y.max_exp());
        return y.scaled(lead.inverse());
    };
    a = normalize(a);
    b = normalize(b);
    while (!b.is_zero()) {
        // remainder of a by b
        LaurentPoly r = a;
        const Scalar blead = b.coeff(b.max_exp());
        while (!r.is_zero() && r.max_exp() >= b.max_exp() && r.min_exp() >= 0) {
            int k = r.max_exp() - b.max_exp();
            Scalar qc = r.coeff(r.max_exp()) / blead;
            for (const auto& [n, bc] : b.terms()) r.add_term(n + k, -(qc * bc));
        }
        a = b;
        b = normalize(r);
    }
    return a;
}

} // namespace

RatFunc::RatFunc(LaurentPoly n)
    : num_(std::move(n)), den_(LaurentPoly::constant(Scalar::from_int(1, num_.tower()))) {}

RatFunc::RatFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZeroError("RatFunc with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    Tower t = num_.tower();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(Scalar::from_int(1, t));
        return;
    }
    // cancel the z-monomial support
    int m = std::min(num_.min_exp(), den_.min_exp());
    if (m != 0) {
        LaurentPoly shift = LaurentPoly::zpow(t, -m);
        num_ = num_ * shift;
        den_ = den_ * shift;
    }
    if (t == Tower::Rational) {
        LaurentPoly g = rat_gcd_poly(num_, den_);
        if (!g.is_zero() && (g.max_exp() - g.min_exp() > 0)) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    // monic denominator where scalar division is cheap
    if (t == Tower::Rational || t == Tower::Complex) {
        Scalar lead = den_.coeff(den_.max_exp());
        bool is_one;
        if (t == Tower::Rational)
            is_one = lead.rat() == 1;
        else
            is_one = lead.cplx().re == 1 && lead.cplx().im == 0;
        if (!is_one) {
            Scalar inv = lead.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
    if (den_.terms().size() == 1) {
        // monomial denominator divides exactly
        int e = den_.min_exp();
        Scalar c = den_.coeff(e);
        num_ = (num_ * LaurentPoly::zpow(num_.tower(), -e)).scaled(c.inverse());
        den_ = LaurentPoly::constant(Scalar::from_int(1, t));
    }
}

bool RatFunc::is_poly() const {
    return den_.terms().size() == 1 && den_.min_exp() == 0;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZeroError("RatFunc division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero RatFunc");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::scaled(const Scalar& c) const { return RatFunc(num_.scaled(c), den_); }

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::subst_scale(const Scalar& zeta) const {
    return RatFunc(num_.subst_scale(zeta), den_.subst_scale(zeta));
}

Scalar RatFunc::eval(const Scalar& z) const {
    Scalar d = den_.eval(z);
    if (d.is_zero()) throw DegenerateParameterError("RatFunc pole at evaluation point");
    return num_.eval(z) / d;
}

bool RatFunc::equals(const RatFunc& o) const {
    return (num_ * o.den_).equals(o.num_ * den_);
}

int RatFunc::deg_infinity() const {
    if (is_zero()) throw Error("degree of zero rational function");
    return num_.max_exp() - den_.max_exp();
}

Scalar RatFunc::lead_infinity() const {
    if (is_zero()) throw Error("leading coefficient of zero rational function");
    return num_.coeff(num_.max_exp()) / den_.coeff(den_.max_exp());
}

std::string RatFunc::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

LaurentPoly ratfunc_apply_division(const LaurentPoly& f, const RatFunc& r) {
    return exact_divide(f * r.num(), r.den());
}

} // namespace awshift
