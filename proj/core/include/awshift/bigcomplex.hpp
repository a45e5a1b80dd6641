#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "awshift/rational.hpp"

namespace awshift {

// Arbitrary-precision real.  One global working precision is set once per
// run (see set_precision); every value created afterwards inherits it, so
// mixed-precision arithmetic never actually occurs.
using BigFloat = boost::multiprecision::mpfr_float;

void set_precision(unsigned decimal_digits);
unsigned precision_digits();

BigFloat big_pi();
BigFloat pow10(long e);

struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(long r) : re(r), im(0) {}
    BigComplex(BigFloat r) : re(std::move(r)), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex from_rat(const Rat& r) { return BigComplex(BigFloat(r.get_mpq_t())); }
    // m * exp(i*pi*angle), angle rational
    static BigComplex polar_pi(const BigFloat& magnitude, const Rat& angle);
    // e^{2 pi i j / n}
    static BigComplex unit_root(long j, long n);

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const;
    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o) {
        *this = *this * o;
        return *this;
    }

    bool is_zero() const { return re == 0 && im == 0; }
    BigFloat abs2() const { return re * re + im * im; }
    BigFloat abs() const;
    BigComplex inverse() const;
    BigComplex pow_int(long e) const;
    // principal fractional power through polar form
    BigComplex pow_rat(const Rat& e) const;

    std::string str(unsigned digits = 12) const;
};

} // namespace awshift
