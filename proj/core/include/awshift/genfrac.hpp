#pragma once

#include <array>
#include <map>
#include <string>

#include "awshift/rational.hpp"

namespace awshift {

// Exponent vector for the five generators (tau0, tt0, tau1, tt1, s), s = q^{1/2}.
using Exp5 = std::array<int, 5>;

inline constexpr int GEN_TAU0 = 0;
inline constexpr int GEN_TT0 = 1;
inline constexpr int GEN_TAU1 = 2;
inline constexpr int GEN_TT1 = 3;
inline constexpr int GEN_S = 4;

extern const char* const kGenNames[5];

// Multivariate Laurent polynomial in the five generators over Rat.
// Stored monomials always have nonzero coefficient; zero is the empty map.
class GenPoly {
public:
    GenPoly() = default;
    explicit GenPoly(const Rat& c) {
        if (c != 0) t_[Exp5{0, 0, 0, 0, 0}] = c;
    }
    static GenPoly monomial(const Rat& c, const Exp5& e) {
        GenPoly p;
        if (c != 0) p.t_[e] = c;
        return p;
    }
    static GenPoly generator(int which, int exp = 1) {
        Exp5 e{0, 0, 0, 0, 0};
        e[static_cast<size_t>(which)] = exp;
        return monomial(Rat(1), e);
    }

    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    size_t size() const { return t_.size(); }
    const std::map<Exp5, Rat>& terms() const { return t_; }

    GenPoly operator+(const GenPoly& o) const;
    GenPoly operator-(const GenPoly& o) const;
    GenPoly operator*(const GenPoly& o) const;
    GenPoly operator-() const;
    bool operator==(const GenPoly& o) const { return t_ == o.t_; }

    // exponent-wise inversion of every generator (the * involution on K)
    GenPoly inverted_generators() const;

    Rat content() const;
    // lexicographically greatest monomial's coefficient (0 for the zero poly)
    Rat lead_coeff() const;

    Rat eval_rat(const std::array<Rat, 5>& v) const;

    std::string str() const;

    void add_term(const Exp5& e, const Rat& c);

private:
    std::map<Exp5, Rat> t_;
};

// Ratio of two GenPoly, den != 0.  Reduction cancels the monomial support
// and the denominator content; no multivariate gcd is attempted, so equality
// goes through cross-multiplication.
class GenFrac {
public:
    GenFrac() : num_(), den_(Rat(1)) {}
    explicit GenFrac(const Rat& c) : num_(c), den_(Rat(1)) {}
    GenFrac(GenPoly n, GenPoly d);

    static GenFrac generator(int which, int exp = 1) {
        return GenFrac(GenPoly::generator(which, exp), GenPoly(Rat(1)));
    }
    static GenFrac monomial(const Rat& c, const Exp5& e) {
        return GenFrac(GenPoly::monomial(c, e), GenPoly(Rat(1)));
    }

    const GenPoly& num() const { return num_; }
    const GenPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    GenFrac operator+(const GenFrac& o) const;
    GenFrac operator-(const GenFrac& o) const;
    GenFrac operator*(const GenFrac& o) const;
    GenFrac operator/(const GenFrac& o) const;
    GenFrac operator-() const;
    bool operator==(const GenFrac& o) const;
    bool operator!=(const GenFrac& o) const { return !(*this == o); }

    GenFrac inverse() const;
    GenFrac pow(long e) const;
    // generator -> generator^{-1} on num and den (the * involution)
    GenFrac inverted_generators() const;

    Rat eval_rat(const std::array<Rat, 5>& v) const;

    std::string str() const;

private:
    void reduce();

    GenPoly num_, den_;
};

} // namespace awshift
