#include "awshift/params.hpp"

#include <sstream>

namespace awshift {

Shift Shift::v(int i) {
    Rat half(1, 2);
    switch (i) {
        case 1: return Shift(half, half, half, half);
        case 2: return Shift(half, half, -half, -half);
        case 3: return Shift(half, -half, half, -half);
        case 4: return Shift(half, -half, -half, half);
    }
    throw Error("Shift::v index out of range");
}

Shift Shift::eps(int i) {
    Shift s;
    s.h[static_cast<size_t>(i - 1)] = 1;
    return s;
}

Rat Shift::dot_v(int i) const {
    static const int sign[4][4] = {
        {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    Rat acc(0);
    for (size_t j = 0; j < 4; ++j) acc += Rat(sign[i - 1][j], 2) * h[j];
    acc.canonicalize();
    return acc;
}

bool Shift::admissible() const {
    for (int i = 1; i <= 4; ++i)
        if (!rat_is_int(dot_v(i))) return false;
    return true;
}

bool Shift::is_zero() const {
    for (const auto& x : h)
        if (x != 0) return false;
    return true;
}

Shift Shift::operator+(const Shift& o) const {
    Shift r;
    for (size_t i = 0; i < 4; ++i) {
        r.h[i] = h[i] + o.h[i];
        r.h[i].canonicalize();
    }
    return r;
}

Shift Shift::operator-() const {
    Shift r;
    for (size_t i = 0; i < 4; ++i) r.h[i] = -h[i];
    return r;
}

Shift Shift::operator*(long n) const {
    Shift r;
    for (size_t i = 0; i < 4; ++i) {
        r.h[i] = h[i] * n;
        r.h[i].canonicalize();
    }
    return r;
}

std::string Shift::str() const {
    std::ostringstream os;
    os << "(" << rat_str(h[0]) << "," << rat_str(h[1]) << "," << rat_str(h[2]) << ","
       << rat_str(h[3]) << ")";
    return os.str();
}

std::string mode_name(ParamMode m) {
    switch (m) {
        case ParamMode::SymbolicGenerators: return "symbolic";
        case ParamMode::RationalSpecialized: return "rational";
        case ParamMode::NumericComplex: return "numeric";
        case ParamMode::JetQ1: return "jet";
    }
    return "?";
}

ParamSet ParamSet::symbolic() {
    std::array<Scalar, 5> t{
        Scalar(GenFrac::generator(GEN_TAU0)), Scalar(GenFrac::generator(GEN_TT0)),
        Scalar(GenFrac::generator(GEN_TAU1)), Scalar(GenFrac::generator(GEN_TT1)),
        Scalar(GenFrac::generator(GEN_S))};
    return ParamSet(ParamMode::SymbolicGenerators, std::move(t));
}

ParamSet ParamSet::rational(const std::array<Rat, 5>& taus) {
    std::array<Scalar, 5> t{Scalar(taus[0]), Scalar(taus[1]), Scalar(taus[2]),
                            Scalar(taus[3]), Scalar(taus[4])};
    for (const auto& x : taus)
        if (x == 0) throw DegenerateParameterError("zero generator value");
    return ParamSet(ParamMode::RationalSpecialized, std::move(t));
}

ParamSet ParamSet::numeric(const std::array<BigComplex, 5>& taus) {
    std::array<Scalar, 5> t{Scalar(taus[0]), Scalar(taus[1]), Scalar(taus[2]),
                            Scalar(taus[3]), Scalar(taus[4])};
    for (const auto& x : taus)
        if (x.is_zero()) throw DegenerateParameterError("zero generator value");
    return ParamSet(ParamMode::NumericComplex, std::move(t));
}

ParamSet ParamSet::jet_q1() {
    Rat half(1, 2);
    KLin k1 = KLin::k(1), k2 = KLin::k(2), k3 = KLin::k(3), k4 = KLin::k(4);
    auto scale = [&](const KLin& k) {
        KLin r;
        for (size_t i = 0; i < 5; ++i) r.c[i] = k.c[i] * half;
        return r;
    };
    std::array<Scalar, 5> t{
        Scalar(Jet::param(Rat(1), scale(k3 + k4))), // tau0 = q^{(k3+k4)/2}
        Scalar(Jet::param(Rat(1), scale(k3 - k4))), // tt0  = q^{(k3-k4)/2}
        Scalar(Jet::param(Rat(1), scale(k1 + k2))), // tau1 = q^{(k1+k2)/2}
        Scalar(Jet::param(Rat(1), scale(k1 - k2))), // tt1  = q^{(k1-k2)/2}
        Scalar(Jet::param(Rat(1), KLin(half)))      // s    = q^{1/2}
    };
    return ParamSet(ParamMode::JetQ1, std::move(t));
}

ParamSet ParamSet::random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(2, 97);
    std::array<Rat, 5> t;
    for (auto& x : t) {
        long n = dist(rng), d = dist(rng);
        x = rat(n, d);
    }
    return rational(t);
}

ParamSet ParamSet::default_numeric() {
    // |a|=0.63, |b|~0.57, |c|~0.44, |d|~0.36, |q|~0.52; all label shifts by
    // one v_i keep magnitudes inside the unit disc.
    auto mk = [](const char* mag, long pnum, long pden) {
        return BigComplex::polar_pi(BigFloat(mag), rat(pnum, pden));
    };
    std::array<BigComplex, 5> t{
        mk("0.50", 1, 5),   // tau0
        mk("1.10", -1, 7),  // tt0
        mk("0.55", 1, 11),  // tau1
        mk("1.05", 2, 9),   // tt1
        mk("0.72", 1, 9)    // s
    };
    return numeric(t);
}

Tower ParamSet::tower() const { return tau_[0].tower(); }

Scalar ParamSet::q_pow(const Rat& r) const {
    Rat twice = r * 2;
    twice.canonicalize();
    if (rat_is_int(twice)) return s().pow(rat_to_long(twice));
    if (mode_ == ParamMode::NumericComplex) return Scalar(s().cplx().pow_rat(twice));
    throw Error("q^" + rat_str(r) + " is not representable through integer powers of s");
}

ParamSet ParamSet::shifted(const Shift& sh) const {
    // tau1 *= s^{h1+h2}, tt1 *= s^{h1-h2}, tau0 *= s^{h3+h4}, tt0 *= s^{h3-h4}
    std::array<Rat, 4> e{sh.h[2] + sh.h[3], sh.h[2] - sh.h[3], sh.h[0] + sh.h[1],
                         sh.h[0] - sh.h[1]};
    ParamSet p = *this;
    for (size_t i = 0; i < 4; ++i) {
        e[i].canonicalize();
        Scalar f;
        if (rat_is_int(e[i])) {
            f = s().pow(rat_to_long(e[i]));
        } else if (mode_ == ParamMode::NumericComplex) {
            f = Scalar(s().cplx().pow_rat(e[i]));
        } else {
            throw Error("shift " + sh.str() + " needs a fractional power of s in mode " +
                        mode_name(mode_));
        }
        p.tau_[i] = p.tau_[i] * f;
    }
    p.offset_ = offset_ + sh;
    return p;
}

ParamSet ParamSet::starred() const {
    ParamSet p = *this;
    for (auto& t : p.tau_) t = t.inverse();
    p.offset_ = -offset_;
    return p;
}

std::string ParamSet::str() const {
    std::ostringstream os;
    os << mode_name(mode_) << "[";
    for (size_t i = 0; i < 5; ++i) {
        if (i) os << ", ";
        os << kGenNames[i] << "=" << tau_[i].str();
    }
    os << "]";
    if (!offset_.is_zero()) os << "+" << offset_.str();
    return os.str();
}

} // namespace awshift
