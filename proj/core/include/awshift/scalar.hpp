#pragma once

#include <string>
#include <variant>

#include "awshift/bigcomplex.hpp"
#include "awshift/errors.hpp"
#include "awshift/genfrac.hpp"
#include "awshift/klin.hpp"
#include "awshift/rational.hpp"

namespace awshift {

// The scalar towers.  Every coefficient in the engine is one of these:
//   Rational   - exact rational specialization of the generators
//   Generators - fraction field of Laurent polynomials in (t0,tt0,t1,tt1,s)
//   Complex    - arbitrary-precision complex for quadrature
//   KLinear    - limit-side scalars c0 + sum ci*ki (q -> 1 machinery)
//   JetQ1      - first-order jets (value, d/dq at q=1) over KLinear
enum class Tower { Rational, Generators, Complex, KLinear, JetQ1 };

std::string tower_name(Tower t);

class Scalar {
public:
    Scalar() : v_(Rat(0)) {}
    explicit Scalar(Rat r) : v_(std::move(r)) {}
    explicit Scalar(GenFrac g) : v_(std::move(g)) {}
    explicit Scalar(BigComplex c) : v_(std::move(c)) {}
    explicit Scalar(KLin k) : v_(std::move(k)) {}
    explicit Scalar(Jet j) : v_(std::move(j)) {}

    static Scalar from_int(long n, Tower t);
    static Scalar from_rat(const Rat& r, Tower t);

    Tower tower() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    // Exact zero test.  In the Complex tower this is bit-exact zero; numeric
    // "small" tests are done explicitly by the quadrature layer instead.
    bool is_zero() const;
    // Exact equality; unavailable for Complex (throws), use residuals there.
    bool equals(const Scalar& o) const;

    const Rat& rat() const;
    const GenFrac& gen() const;
    const BigComplex& cplx() const;
    const KLin& klin() const;
    const Jet& jet() const;

    std::string str() const;

private:
    std::variant<Rat, GenFrac, BigComplex, KLin, Jet> v_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar::from_int(n, s.tower()) * s; }

} // namespace awshift
