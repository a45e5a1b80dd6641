#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "awshift/matshift.hpp"

namespace awshift {

// Numeric evaluation of the weights Delta and nabla, the constant-term
// functional, the three inner products, the norm formulas and the adjoint
// identities, at NumericComplex parameters with |a|,|b|,|c|,|d|,|q| < 1.
enum class WeightKind { Delta, Nabla };

// Truncated affine-root product evaluator.  The factor classes are
//   x in +-eps + Z c      -> (1 + b e^x)/(1 - a e^x)
//   x in +-eps + 1/2 + Z  -> (1 + q^{-1/2} d e^x)/(1 - q^{-1/2} c e^x)
//   x in +-2eps + 2Z      -> (1 - e^x)/(1 - b^2 e^x)
//   x in +-2eps + 1 + 2Z  -> (1 - e^x)/(1 - q^{-1} d^2 e^x)
// with e^x = q^{r/2} z^{+-1} or q^r z^{+-2}.  Delta runs over the positive
// roots; nabla adds the two x(0) = 0 roots -eps and -2eps.
class WeightEvaluator {
public:
    // R <= 0 selects the truncation level adaptively from |q| and the
    // working precision
    WeightEvaluator(ParamSet params, WeightKind kind, int R = 0);

    const ParamSet& params() const { return p_; }
    WeightKind kind() const { return kind_; }
    int truncation() const { return R_; }
    const BigFloat& tail_bound() const { return tail_; }

    // |z| must be 1 up to 1e-30 unless off_circle is set (the weight itself
    // is evaluated by the same truncated product at any nonzero z)
    BigComplex eval(const BigComplex& z, bool off_circle = false) const;

private:
    ParamSet p_;
    WeightKind kind_;
    int R_;
    BigFloat tail_;
    BigComplex a_, b_, c_, d_, q_;
};

struct CtResult {
    BigComplex value;
    BigFloat error_estimate;
    long n_points;
};

// Trapezoid average (1/N) sum f(e^{2 pi i j / N}) with N doubling until two
// successive levels agree to tol; compensated summation in a fixed order.
CtResult constant_term(const std::function<BigComplex(const BigComplex&)>& f,
                       const BigFloat& tol, long n_start = 64, long n_max = 1 << 16);

enum class PairingKind { Round, Angle, AnglePrime }; // ( , ), < , >, < , >'

// Numeric inner products; g needs provenance for Round/AnglePrime (its *
// is the rebuild at starred parameters, barred).  The weight evaluators are
// cached per label inside.
class InnerProductEngine {
public:
    explicit InnerProductEngine(ParamSet numeric_params);

    const ParamSet& params() const { return p_; }

    BigComplex pair(const LaurentPoly& f, const LaurentPoly& g, PairingKind kind);
    // normalised variants divide by the pairing of (1,1)
    BigComplex pair_normalized(const LaurentPoly& f, const LaurentPoly& g, PairingKind kind);
    // pairing at a shifted label
    BigComplex pair_at(const Shift& label, const LaurentPoly& f, const LaurentPoly& g,
                       PairingKind kind);
    BigComplex pair_normalized_at(const Shift& label, const LaurentPoly& f,
                                  const LaurentPoly& g, PairingKind kind);

    BigComplex ct_weight(const Shift& label, WeightKind kind); // ct of the bare weight

    const BigFloat& tolerance() const { return tol_; }

private:
    struct WeightCache {
        std::shared_ptr<WeightEvaluator> ev;
        std::map<std::pair<long, long>, BigComplex> points; // (j, N) reduced
    };
    WeightCache& cache_for(const Shift& label, WeightKind kind);
    BigComplex weight_at(WeightCache& wc, long j, long n);

    ParamSet p_;
    BigFloat tol_;
    std::map<std::string, WeightCache> caches_;
};

// q-Pochhammer values
BigComplex qpoch_inf(const BigComplex& x, const BigComplex& q);
BigComplex qpoch_fin(const BigComplex& x, const BigComplex& q, long n);

struct NumCheck {
    std::string name;
    BigFloat residual;
    bool pass;
};

struct NumReport {
    bool pass = true;
    std::vector<NumCheck> checks;
    long max_n_points = 0;
    int truncation = 0;

    void add(const std::string& name, const BigFloat& residual, const BigFloat& tol);
    void add_flag(const std::string& name, bool ok);
};

// Norm suite: h_n by quadrature against the closed forms, the normalized
// variants, the five recursion families, the weight shift identity
// (1-az)(1-aqz^-1) Delta_k = Delta_{k+eps1} at circle points, and the E_1
// auxiliary pairing.
NumReport verify_norms(const ParamSet& p, long n_max, const BigFloat& tol);

// Orthogonality of E_m (|m| <= max_idx) and P_m under the respective
// pairings, plus the general inner-product facts.
NumReport verify_orthogonality(const ParamSet& p, long max_idx, const BigFloat& tol);

// All dagger/star adjoint tables, the six named non-symmetric prefactors,
// and the Phi-conjugation identity at circle points.
NumReport verify_adjoints_numeric(const ParamSet& p, int degree, const BigFloat& tol,
                                  const BigFloat& phi_tol);

// Matrix-level numeric checks: H_st/H_ko against ct(f^T W g^*), the
// V-similarity of W_st, and the block orthogonality of the matrix families.
NumReport verify_matrix_weights(const ParamSet& p, long max_idx, const BigFloat& tol);

} // namespace awshift
