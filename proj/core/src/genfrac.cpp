#include "awshift/genfrac.hpp"

#include <sstream>

namespace awshift {

const char* const kGenNames[5] = {"t0", "tt0", "t1", "tt1", "s"};

void GenPoly::add_term(const Exp5& e, const Rat& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

GenPoly GenPoly::operator+(const GenPoly& o) const {
    GenPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

GenPoly GenPoly::operator-(const GenPoly& o) const {
    GenPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

GenPoly GenPoly::operator*(const GenPoly& o) const {
    GenPoly r;
    for (const auto& [e1, c1] : t_) {
        for (const auto& [e2, c2] : o.t_) {
            Exp5 e;
            for (size_t i = 0; i < 5; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

GenPoly GenPoly::operator-() const {
    GenPoly r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

GenPoly GenPoly::inverted_generators() const {
    GenPoly r;
    for (const auto& [e, c] : t_) {
        Exp5 f;
        for (size_t i = 0; i < 5; ++i) f[i] = -e[i];
        r.t_[f] = c;
    }
    return r;
}

Rat GenPoly::content() const {
    Rat g(0);
    for (const auto& [e, c] : t_) g = rat_gcd(g, c);
    return g;
}

Rat GenPoly::lead_coeff() const {
    if (t_.empty()) return Rat(0);
    return t_.rbegin()->second;
}

Rat GenPoly::eval_rat(const std::array<Rat, 5>& v) const {
    Rat acc(0);
    for (const auto& [e, c] : t_) {
        Rat m = c;
        for (size_t i = 0; i < 5; ++i)
            if (e[i] != 0) m *= rat_pow(v[i], e[i]);
        acc += m;
    }
    return acc;
}

std::string GenPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // deterministic: iterate the ordered map
    for (const auto& [e, c] : t_) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (ac != 1) {
            os << rat_str(ac);
            printed = true;
        }
        for (size_t i = 0; i < 5; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << kGenNames[i];
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

GenFrac::GenFrac(GenPoly n, GenPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZeroError("GenFrac with zero denominator");
    reduce();
}

void GenFrac::reduce() {
    if (num_.is_zero()) {
        den_ = GenPoly(Rat(1));
        return;
    }
    // cancel the joint monomial support
    Exp5 m;
    bool init = false;
    auto scan = [&](const GenPoly& p) {
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            if (!init) {
                m = e;
                init = true;
            } else {
                for (size_t i = 0; i < 5; ++i) m[i] = std::min(m[i], e[i]);
            }
        }
    };
    scan(num_);
    scan(den_);
    bool nontrivial = false;
    for (size_t i = 0; i < 5; ++i)
        if (m[i] != 0) nontrivial = true;
    if (nontrivial) {
        Exp5 neg;
        for (size_t i = 0; i < 5; ++i) neg[i] = -m[i];
        GenPoly shift = GenPoly::monomial(Rat(1), neg);
        num_ = num_ * shift;
        den_ = den_ * shift;
    }
    // monomial denominator divides exactly
    if (den_.is_monomial()) {
        const auto& [e, c] = *den_.terms().begin();
        Exp5 neg;
        for (size_t i = 0; i < 5; ++i) neg[i] = -e[i];
        num_ = num_ * GenPoly::monomial(Rat(1) / c, neg);
        den_ = GenPoly(Rat(1));
        return;
    }
    // scale so den has content 1 and positive leading coefficient
    Rat c = den_.content();
    if (den_.lead_coeff() < 0) c = -c;
    if (c != 1) {
        GenPoly inv = GenPoly(Rat(1) / c);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

GenFrac GenFrac::operator+(const GenFrac& o) const {
    return GenFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

GenFrac GenFrac::operator-(const GenFrac& o) const {
    return GenFrac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

GenFrac GenFrac::operator*(const GenFrac& o) const {
    return GenFrac(num_ * o.num_, den_ * o.den_);
}

GenFrac GenFrac::operator/(const GenFrac& o) const {
    if (o.num_.is_zero()) throw DivisionByZeroError("GenFrac division by zero");
    return GenFrac(num_ * o.den_, den_ * o.num_);
}

GenFrac GenFrac::operator-() const {
    GenFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

bool GenFrac::operator==(const GenFrac& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

GenFrac GenFrac::inverse() const {
    if (num_.is_zero()) throw DivisionByZeroError("inverse of zero GenFrac");
    return GenFrac(den_, num_);
}

GenFrac GenFrac::pow(long e) const {
    if (e == 0) return GenFrac(Rat(1));
    GenFrac b = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    GenFrac acc(Rat(1));
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

GenFrac GenFrac::inverted_generators() const {
    return GenFrac(num_.inverted_generators(), den_.inverted_generators());
}

Rat GenFrac::eval_rat(const std::array<Rat, 5>& v) const {
    Rat d = den_.eval_rat(v);
    if (d == 0) throw DegenerateParameterError("GenFrac denominator vanishes at sample");
    return num_.eval_rat(v) / d;
}

std::string GenFrac::str() const {
    if (den_ == GenPoly(Rat(1))) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    std::string ns = num_.size() > 1 ? "(" + n + ")" : n;
    std::string ds = den_.size() > 1 ? "(" + d + ")" : d;
    return ns + "/" + ds;
}

} // namespace awshift
