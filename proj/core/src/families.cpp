#include "awshift/families.hpp"

#include <vector>

namespace awshift {

AWFamily::AWFamily(ParamSet p, EConstruction mode)
    : params_(std::move(p)), mode_(mode), gens_(build_daha(params_)) {}

Scalar AWFamily::y_eigenvalue(const ParamSet& p, long n) {
    // n <= 0: q^{-n + k'_1};  n >= 1: q^{-n - k'_1}
    Scalar qk = p.q_kv1();
    Scalar qpow = p.s().pow(-2 * n);
    return n <= 0 ? qpow * qk : qpow * qk.inverse();
}

Scalar AWFamily::l_eigenvalue(const ParamSet& p, long m) {
    Scalar qk = p.q_kv1();
    Scalar qm = p.s().pow(2 * m);
    return qm * qk + (qm * qk).inverse();
}

Scalar AWFamily::nlo_c(const ParamSet& p, long n1) {
    if (n1 < 1) throw Error("nlo_c index must be >= 1");
    long n = n1 - 1;
    Scalar a = p.a(), b = p.b(), c = p.c(), d = p.d();
    Scalar qn = p.s().pow(2 * n), q2n = p.s().pow(4 * n);
    Scalar den = Scalar::from_int(1, p.tower()) - a * b * c * d * q2n;
    if (den.is_zero()) throw DegenerateParameterError("1 - abcd q^{2n} = 0");
    Scalar num = c * qn + d * qn - a * c * d * q2n - b * c * d * q2n;
    return -(num / den);
}

Scalar AWFamily::nlo_ctilde(const ParamSet& p, long n) {
    if (n < 0) throw Error("nlo_ctilde index must be >= 0");
    Scalar a = p.a(), b = p.b(), c = p.c(), d = p.d();
    Scalar one = Scalar::from_int(1, p.tower());
    Scalar qn = p.s().pow(2 * n);
    Scalar q2n1 = p.s().pow(4 * n - 2);
    Scalar qn1 = p.s().pow(2 * n - 2);
    Scalar den = one - a * b * c * d * q2n1;
    if (den.is_zero()) throw DegenerateParameterError("1 - abcd q^{2n-1} = 0");
    Scalar num = one + a * b - a * b * c * d * qn1 - a * b * qn;
    return num / den;
}

LaurentPoly AWFamily::E(long n) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cacheE_.find(n);
        if (it != cacheE_.end()) return it->second;
    }
    LaurentPoly e = build_E(n);
    EConstruction mode = mode_;
    e = e.with_provenance([n, mode](const ParamSet& q) {
        AWFamily fam(q, mode);
        return fam.E(n);
    });
    std::lock_guard<std::mutex> lock(mu_);
    cacheE_.emplace(n, e);
    return e;
}

LaurentPoly AWFamily::P(long m) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cacheP_.find(m);
        if (it != cacheP_.end()) return it->second;
    }
    LaurentPoly pm = build_P(m);
    pm = pm.with_provenance([m](const ParamSet& q) {
        AWFamily fam(q);
        return fam.P(m);
    });
    std::lock_guard<std::mutex> lock(mu_);
    cacheP_.emplace(m, pm);
    return pm;
}

LaurentPoly AWFamily::build_E(long n) const {
    if (n == 0) return LaurentPoly::constant(params_.from_int(1));
    return mode_ == EConstruction::CreationRecursion ? build_E_creation(n)
                                                     : build_E_triangular(n);
}

LaurentPoly AWFamily::build_E_creation(long n) const {
    // ladder from E_0 = 1: alpha0 E_{-m} = tau1 E_{m+1}, alpha1 E_{m+1} = tau1^-1 E_{-m-1}
    LaurentPoly cur = LaurentPoly::constant(params_.from_int(1));
    long idx = 0; // current index
    Scalar tau1 = params_.tau1();
    while (idx != n) {
        if (idx <= 0) {
            // E_{idx} -> E_{-idx+1}
            Scalar lambda = y_eigenvalue(params_, idx);
            cur = creation_apply(CreationOp::Alpha0, gens_, cur, lambda).scaled(tau1.inverse());
            idx = -idx + 1;
        } else {
            // E_{idx} -> E_{-idx}
            Scalar lambda = y_eigenvalue(params_, idx);
            cur = creation_apply(CreationOp::Alpha1, gens_, cur, lambda).scaled(tau1);
            idx = -idx;
        }
        if ((n > 0 && idx > n) || (n <= 0 && idx < n))
            throw Error("creation ladder overshoot"); // unreachable
    }
    return cur;
}

LaurentPoly AWFamily::build_E_triangular(long n) const {
    const Tower t = params_.tower();
    const int top = ns_rank(static_cast<int>(n));
    std::vector<LaurentPoly> img;
    img.reserve(static_cast<size_t>(top) + 1);
    for (int r = 0; r <= top; ++r) {
        LaurentPoly mono = LaurentPoly::zpow(t, ns_exponent_of_rank(r));
        LaurentPoly y = gens_.Y.apply(mono);
        for (const auto& [e, c] : y.terms()) {
            (void)c;
            if (ns_rank(e) > r) throw Error("Y is not triangular in the non-symmetric order");
        }
        img.push_back(std::move(y));
    }
    Scalar lambda = y_eigenvalue(params_, n);
    std::vector<Scalar> x(static_cast<size_t>(top) + 1, Scalar::from_int(0, t));
    x[static_cast<size_t>(top)] = Scalar::from_int(1, t);
    for (int i = top - 1; i >= 0; --i) {
        Scalar acc = Scalar::from_int(0, t);
        int ei = ns_exponent_of_rank(i);
        for (int j = i + 1; j <= top; ++j)
            acc += img[static_cast<size_t>(j)].coeff(ei) * x[static_cast<size_t>(j)];
        Scalar diag = img[static_cast<size_t>(i)].coeff(ei) - lambda;
        if (diag.is_zero())
            throw EigenvalueCollisionError("Y-eigenvalue collision at rank " + std::to_string(i));
        x[static_cast<size_t>(i)] = -(acc / diag);
    }
    LaurentPoly e(t);
    for (int r = 0; r <= top; ++r) e.add_term(ns_exponent_of_rank(r), x[static_cast<size_t>(r)]);
    return e;
}

LaurentPoly AWFamily::build_P(long m) const {
    if (m < 0) throw Error("P index must be >= 0");
    const Tower t = params_.tower();
    if (m == 0) return LaurentPoly::constant(params_.from_int(1));
    std::vector<LaurentPoly> img;
    img.reserve(static_cast<size_t>(m) + 1);
    for (long j = 0; j <= m; ++j) {
        LaurentPoly cls = LaurentPoly::zpow(t, static_cast<int>(j));
        if (j > 0) cls = cls + LaurentPoly::zpow(t, static_cast<int>(-j));
        LaurentPoly y = gens_.L.apply(cls);
        if (!y.is_zero() && std::max(std::abs(y.min_exp()), std::abs(y.max_exp())) > j)
            throw Error("L is not triangular in the symmetric order");
        img.push_back(std::move(y));
    }
    Scalar lambda = l_eigenvalue(params_, m);
    std::vector<Scalar> x(static_cast<size_t>(m) + 1, Scalar::from_int(0, t));
    x[static_cast<size_t>(m)] = Scalar::from_int(1, t);
    for (long i = m - 1; i >= 0; --i) {
        Scalar acc = Scalar::from_int(0, t);
        for (long j = i + 1; j <= m; ++j)
            acc += img[static_cast<size_t>(j)].coeff(static_cast<int>(i)) * x[static_cast<size_t>(j)];
        Scalar diag = img[static_cast<size_t>(i)].coeff(static_cast<int>(i)) - lambda;
        if (diag.is_zero())
            throw EigenvalueCollisionError("L-eigenvalue collision at class " + std::to_string(i));
        x[static_cast<size_t>(i)] = -(acc / diag);
    }
    LaurentPoly pm(t);
    for (long j = 0; j <= m; ++j) {
        pm.add_term(static_cast<int>(j), x[static_cast<size_t>(j)]);
        if (j > 0) pm.add_term(static_cast<int>(-j), x[static_cast<size_t>(j)]);
    }
    return pm;
}

} // namespace awshift
