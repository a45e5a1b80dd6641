#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "awshift/params.hpp"
#include "awshift/scalar.hpp"

namespace awshift {

class LaurentPoly;

// Parametric construction handle: rebuilds the polynomial at another
// parameter set.  Carried by polynomials that need the * or circ involution
// outside the symbolic tower (conjugation re-runs the constructor at
// star-inverted parameters).
using PolyBuilder = std::function<LaurentPoly(const ParamSet&)>;

// Laurent polynomial in z over one scalar tower.  No stored zero
// coefficients (exact towers); finite support.
class LaurentPoly {
public:
    LaurentPoly() : tower_(Tower::Rational) {}
    explicit LaurentPoly(Tower t) : tower_(t) {}

    static LaurentPoly zero(Tower t) { return LaurentPoly(t); }
    static LaurentPoly constant(const Scalar& c);
    static LaurentPoly monomial(const Scalar& c, int n);
    static LaurentPoly zpow(Tower t, int n) { return monomial(Scalar::from_int(1, t), n); }
    // rational coefficient table; carries the obvious parameter-free
    // provenance (rationals are fixed by *)
    static LaurentPoly from_rat_table(const std::map<int, Rat>& table, Tower t);

    Tower tower() const { return tower_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<int, Scalar>& terms() const { return c_; }
    Scalar coeff(int n) const;
    int min_exp() const; // throws on zero
    int max_exp() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Scalar& c) const;

    // z -> z^{-1}
    LaurentPoly bar() const;
    // z -> zeta * z
    LaurentPoly subst_scale(const Scalar& zeta) const;
    Scalar eval(const Scalar& z) const;

    bool equals(const LaurentPoly& o) const;
    bool is_symmetric() const; // invariant under bar
    // drop coefficients below tol in absolute value (Complex tower only)
    LaurentPoly chopped(const BigFloat& tol) const;

    void set_term(int n, const Scalar& c);
    void add_term(int n, const Scalar& c);

    const PolyBuilder& provenance() const { return prov_; }
    LaurentPoly with_provenance(PolyBuilder b) const;
    LaurentPoly rebuilt_at(const ParamSet& p) const; // throws ProvenanceError if raw

    std::string str() const;

private:
    Tower tower_;
    std::map<int, Scalar> c_;
    PolyBuilder prov_;
};

// NonSymmetric ranks 1 < z < z^-1 < z^2 < z^-2 < ...; Symmetric ranks
// 1 < z+z^-1 < z^2+z^-2 < ...
enum class MonomialOrder { NonSymmetric, Symmetric };

// rank of z^n in the NonSymmetric order
int ns_rank(int n);
// exponent with the given NonSymmetric rank
int ns_exponent_of_rank(int rank);

struct LeadingTerm {
    // NonSymmetric: the exponent n of the leading monomial z^n.
    // Symmetric: the class index m of z^m + z^-m.
    int index;
    Scalar coeff;
};

LeadingTerm leading_term(const LaurentPoly& f, MonomialOrder ord);

enum class Involution { Circ, Bar, Star };

// The three involutions on A = K[z,z^-1].  bar flips z; circ conjugates
// coefficients (generator inversion in the symbolic tower, provenance
// re-evaluation at starred parameters otherwise); star = circ o bar.
LaurentPoly involution(const LaurentPoly& f, Involution which, const ParamSet& p);

// Exact Laurent division f / d; throws NonExactDivisionError (with the
// remainder attached in the message) if d does not divide f.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& d);

// Rational function num/den in z.  Equality by cross-multiplication;
// reduction cancels the z-monomial support (plus a Euclid gcd in the
// Rational tower, where it is cheap).
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::constant(Scalar(Rat(1)))) {}
    explicit RatFunc(LaurentPoly n);
    RatFunc(LaurentPoly n, LaurentPoly d);

    static RatFunc constant(const Scalar& c) { return RatFunc(LaurentPoly::constant(c)); }
    static RatFunc zero(Tower t) { return RatFunc(LaurentPoly::zero(t)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    Tower tower() const { return num_.tower(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc scaled(const Scalar& c) const;

    RatFunc bar() const;
    RatFunc subst_scale(const Scalar& zeta) const;
    Scalar eval(const Scalar& z) const;

    bool equals(const RatFunc& o) const; // cross-multiplication

    // degree at z->infinity: deg num - deg den
    int deg_infinity() const; // throws on zero
    Scalar lead_infinity() const;

    std::string str() const;

private:
    void reduce();
    LaurentPoly num_, den_;
};

// multiply f by r = num/den and divide exactly (the "operators must land
// back in A" contract); non-exactness is a test signal
LaurentPoly ratfunc_apply_division(const LaurentPoly& f, const RatFunc& r);

} // namespace awshift
