#pragma once

#include <map>
#include <mutex>

#include "awshift/daha.hpp"

namespace awshift {

enum class EConstruction { CreationRecursion, TriangularEigen };

// The non-symmetric family E_n (n in Z) and the symmetric family P_m
// (m >= 0) at one parameter set.  E_n is monic with leading monomial z^n in
// the order 1 < z < z^-1 < z^2 < ...; P_m has leading class z^m + z^-m.
//
// E_n is built either by the creation-operator ladder or by a triangular
// eigenvector solve for Y; both construction routes must agree exactly.
// The cache is append-only behind a mutex; returned polynomials are values.
class AWFamily {
public:
    explicit AWFamily(ParamSet p, EConstruction mode = EConstruction::CreationRecursion);

    const ParamSet& params() const { return params_; }
    EConstruction construction() const { return mode_; }

    LaurentPoly E(long n) const;
    LaurentPoly P(long m) const;

    // Y E_n = lambda_n E_n
    static Scalar y_eigenvalue(const ParamSet& p, long n);
    // L P_m = (q^{m+k'_1} + q^{-m-k'_1}) P_m
    static Scalar l_eigenvalue(const ParamSet& p, long m);

    // closed-form next-to-leading coefficients (oracles):
    //   E_{n+1} = z^{n+1} + c_{n+1} z^{-n} + lot
    //   E_{-n}  = z^{-n} + ctilde_n z^n + lot
    static Scalar nlo_c(const ParamSet& p, long n1);      // c_{n1}, n1 >= 1
    static Scalar nlo_ctilde(const ParamSet& p, long n);  // ctilde_n, n >= 0

private:
    LaurentPoly build_E(long n) const;
    LaurentPoly build_E_creation(long n) const;
    LaurentPoly build_E_triangular(long n) const;
    LaurentPoly build_P(long m) const;

    ParamSet params_;
    EConstruction mode_;
    DahaGens gens_;
    mutable std::mutex mu_;
    mutable std::map<long, LaurentPoly> cacheE_, cacheP_;
};

} // namespace awshift
