#pragma once

#include <array>
#include <sstream>
#include <string>

#include "awshift/errors.hpp"
#include "awshift/rational.hpp"

namespace awshift {

// Affine-linear polynomial c0 + c1*k1 + ... + c4*k4 in the four limit labels,
// over Rat.  Products of two genuinely linear terms are outside the first-order
// jet calculus and raise JetDegreeError.
struct KLin {
    std::array<Rat, 5> c{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};

    KLin() = default;
    explicit KLin(const Rat& c0) { c[0] = c0; }
    static KLin k(int i) { // i in 1..4
        KLin r;
        r.c[static_cast<size_t>(i)] = 1;
        return r;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    bool is_const() const {
        for (size_t i = 1; i < 5; ++i)
            if (c[i] != 0) return false;
        return true;
    }

    KLin operator+(const KLin& o) const {
        KLin r;
        for (size_t i = 0; i < 5; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    KLin operator-(const KLin& o) const {
        KLin r;
        for (size_t i = 0; i < 5; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    KLin operator-() const {
        KLin r;
        for (size_t i = 0; i < 5; ++i) r.c[i] = -c[i];
        return r;
    }
    KLin operator*(const KLin& o) const {
        if (!is_const() && !o.is_const())
            throw JetDegreeError("product of two k-linear terms in a first-order jet");
        const KLin& lin = is_const() ? o : *this;
        const Rat& s = is_const() ? c[0] : o.c[0];
        KLin r;
        for (size_t i = 0; i < 5; ++i) r.c[i] = lin.c[i] * s;
        return r;
    }
    KLin operator/(const KLin& o) const {
        if (!o.is_const()) throw JetDegreeError("division by k-dependent scalar");
        if (o.c[0] == 0) throw DivisionByZeroError("KLin division by zero");
        KLin r;
        for (size_t i = 0; i < 5; ++i) r.c[i] = c[i] / o.c[0];
        return r;
    }
    bool operator==(const KLin& o) const { return c == o.c; }

    std::string str() const {
        static const char* names[5] = {"", "k1", "k2", "k3", "k4"};
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < 5; ++i) {
            if (c[i] == 0) continue;
            Rat a = abs(c[i]);
            if (first) {
                if (c[i] < 0) os << "-";
                first = false;
            } else {
                os << (c[i] < 0 ? " - " : " + ");
            }
            if (i == 0) {
                os << rat_str(a);
            } else {
                if (a != 1) os << rat_str(a) << "*";
                os << names[i];
            }
        }
        if (first) return "0";
        return os.str();
    }
};

// Dual number (value, d/dq at q=1) over KLin, with the jet variable u = q-1.
// Value parts stay plain rationals for all scalars the engine produces.
struct Jet {
    KLin val, der;

    Jet() = default;
    Jet(KLin v, KLin d) : val(std::move(v)), der(std::move(d)) {}
    explicit Jet(const Rat& v) : val(v), der() {}
    static Jet param(const Rat& v, const KLin& d) { return Jet(KLin(v), d); }

    bool is_zero() const { return val.is_zero() && der.is_zero(); }

    Jet operator+(const Jet& o) const { return {val + o.val, der + o.der}; }
    Jet operator-(const Jet& o) const { return {val - o.val, der - o.der}; }
    Jet operator-() const { return {-val, -der}; }
    Jet operator*(const Jet& o) const { return {val * o.val, val * o.der + der * o.val}; }
    Jet operator/(const Jet& o) const {
        Jet inv = o.inverse();
        return *this * inv;
    }
    Jet inverse() const {
        if (!val.is_const()) throw JetDegreeError("jet inverse with k-dependent value part");
        if (val.c[0] == 0) throw DegenerateParameterError("jet with zero value part inverted");
        KLin vinv(Rat(1) / val.c[0]);
        // (v + d u)^{-1} = v^{-1} - v^{-2} d u
        KLin dinv = -(der * (vinv * vinv));
        return {vinv, dinv};
    }
    Jet pow_int(long e) const {
        if (e == 0) return Jet(Rat(1));
        Jet b = e > 0 ? *this : inverse();
        unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
        Jet acc(Rat(1));
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }
    bool operator==(const Jet& o) const { return val == o.val && der == o.der; }

    std::string str() const { return "(" + val.str() + "; " + der.str() + ")"; }
};

} // namespace awshift
