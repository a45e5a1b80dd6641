#pragma once

#include <array>
#include <random>
#include <string>

#include "awshift/scalar.hpp"

namespace awshift {

// A shift h in the 4-dimensional label space.  The lattice basis
//   v1 = (1,1,1,1)/2, v2 = (1,1,-1,-1)/2, v3 = (1,-1,1,-1)/2, v4 = (1,-1,-1,1)/2
// spans the admissible shifts (those with h.v_i integral for all i).
struct Shift {
    std::array<Rat, 4> h{Rat(0), Rat(0), Rat(0), Rat(0)};

    Shift() = default;
    Shift(Rat h1, Rat h2, Rat h3, Rat h4) : h{std::move(h1), std::move(h2), std::move(h3), std::move(h4)} {}

    static Shift zero() { return Shift(); }
    static Shift v(int i);   // i in 1..4
    static Shift eps(int i); // i in 1..4

    Rat dot_eps(int i) const { return h[static_cast<size_t>(i - 1)]; }
    Rat dot_v(int i) const;
    bool admissible() const;
    bool is_zero() const;

    Shift operator+(const Shift& o) const;
    Shift operator-() const;
    Shift operator*(long n) const;
    bool operator==(const Shift& o) const { return h == o.h; }
    bool operator!=(const Shift& o) const { return !(*this == o); }

    std::string str() const;
};

enum class ParamMode { SymbolicGenerators, RationalSpecialized, NumericComplex, JetQ1 };

std::string mode_name(ParamMode m);

// The parameter system.  Five generator values (tau0, tt0, tau1, tt1, s) in
// one scalar tower, plus the label offset accumulated through shifts.
// Derived Askey-Wilson parameters:
//   a = tau1*tt1, b = -tau1/tt1, c = s*tau0*tt0, d = -s*tau0/tt0, q = s^2.
class ParamSet {
public:
    static ParamSet symbolic();
    static ParamSet rational(const std::array<Rat, 5>& taus);
    static ParamSet numeric(const std::array<BigComplex, 5>& taus);
    // parameter jets at q=1 in the four limit labels k1..k4
    static ParamSet jet_q1();
    // tau_i = n/d with n,d uniform in [2,97]; retried by callers on a
    // genericity trip
    static ParamSet random_rational(std::mt19937_64& rng);
    // the default quadrature sample: magnitudes well inside the unit disc,
    // arguments rational multiples of pi
    static ParamSet default_numeric();

    ParamMode mode() const { return mode_; }
    Tower tower() const;

    const Scalar& tau0() const { return tau_[0]; }
    const Scalar& tt0() const { return tau_[1]; }
    const Scalar& tau1() const { return tau_[2]; }
    const Scalar& tt1() const { return tau_[3]; }
    const Scalar& s() const { return tau_[4]; }
    const std::array<Scalar, 5>& taus() const { return tau_; }

    Scalar a() const { return tau1() * tt1(); }
    Scalar b() const { return -(tau1() / tt1()); }
    Scalar c() const { return s() * tau0() * tt0(); }
    Scalar d() const { return -(s() * tau0() / tt0()); }
    Scalar q() const { return s() * s(); }
    // q^{k.v1} = tau0*tau1
    Scalar q_kv1() const { return tau0() * tau1(); }
    // q^r for r in Z/2 (represented through s; fractional powers only in the
    // Complex tower)
    Scalar q_pow(const Rat& r) const;

    Scalar from_int(long n) const { return Scalar::from_int(n, tower()); }
    Scalar from_rat(const Rat& r) const { return Scalar::from_rat(r, tower()); }

    // label change k -> k+h: multiplies (a,b,c,d) by (q^{h1},...,q^{h4})
    ParamSet shifted(const Shift& sh) const;
    // the * involution at the scalar level: every generator to its inverse
    ParamSet starred() const;

    const Shift& offset() const { return offset_; }

    std::string str() const;

private:
    ParamSet(ParamMode m, std::array<Scalar, 5> taus) : mode_(m), tau_(std::move(taus)) {}

    ParamMode mode_;
    std::array<Scalar, 5> tau_;
    Shift offset_;
};

} // namespace awshift
