#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "awshift/errors.hpp"

namespace awshift {

// Exact arbitrary-precision rational.  mpq_class keeps the canonical form
// (reduced, positive denominator) after canonicalize().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_int(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) {
    if (!rat_is_int(r)) throw Error("expected integer rational");
    return static_cast<long>(r.get_num().get_si());
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw DivisionByZeroError("0^negative");
        return Rat(0);
    }
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// gcd of |a|,|b| as nonneg rationals: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2)
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class gn, gl;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(gl.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rat g(gn, gl);
    g.canonicalize();
    return abs(g);
}

} // namespace awshift
