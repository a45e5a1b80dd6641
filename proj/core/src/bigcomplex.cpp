#include "awshift/bigcomplex.hpp"

#include "awshift/errors.hpp"

namespace awshift {

namespace {
unsigned g_digits = 128;
}

void set_precision(unsigned decimal_digits) {
    g_digits = decimal_digits;
    BigFloat::default_precision(decimal_digits);
}

unsigned precision_digits() { return g_digits; }

BigFloat big_pi() {
    BigFloat pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

BigFloat pow10(long e) { return pow(BigFloat(10), e); }

BigComplex BigComplex::polar_pi(const BigFloat& magnitude, const Rat& angle) {
    BigFloat theta = big_pi() * BigFloat(angle.get_mpq_t());
    return {magnitude * cos(theta), magnitude * sin(theta)};
}

BigComplex BigComplex::unit_root(long j, long n) {
    Rat a(2 * j, n);
    a.canonicalize();
    return polar_pi(BigFloat(1), a);
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
    BigFloat d = o.abs2();
    if (d == 0) throw DivisionByZeroError("complex division by zero");
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigFloat BigComplex::abs() const { return sqrt(abs2()); }

BigComplex BigComplex::inverse() const {
    BigFloat d = abs2();
    if (d == 0) throw DivisionByZeroError("inverse of complex zero");
    return {re / d, -im / d};
}

BigComplex BigComplex::pow_int(long e) const {
    if (e == 0) return BigComplex(1);
    BigComplex b = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    BigComplex acc(1);
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

BigComplex BigComplex::pow_rat(const Rat& e) const {
    if (rat_is_int(e)) return pow_int(rat_to_long(e));
    if (is_zero()) return BigComplex(0);
    BigFloat r = abs();
    BigFloat theta = atan2(im, re);
    BigFloat ex(e.get_mpq_t());
    BigFloat nr = pow(r, ex);
    BigFloat nt = theta * ex;
    return {nr * cos(nt), nr * sin(nt)};
}

std::string BigComplex::str(unsigned digits) const {
    std::string s = re.str(digits, std::ios_base::scientific);
    std::string t = im.str(digits, std::ios_base::scientific);
    if (im == 0) return s;
    return s + (im < 0 ? "" : "+") + t + "i";
}

} // namespace awshift
