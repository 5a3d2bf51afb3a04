#pragma once

#include <span>

#include "omega/exact.hpp"
#include "omega/omega_point.hpp"

namespace omega {

/// Index (m, n) of the Poisson Fourier mode P_n^{-m}; m >= 0, n any integer.
struct PFMIndex {
    long m = 0;
    long n = 0;

    long eigenvalue() const { return 4 * m * (m + 1); }
    bool vanishes() const { return std::labs(n) > m; }
};

// Explicit rational form; infinite coordinates go through the inversion
// identity P_n^{-m}(z, w) = (-1)^m P_n^{-m}(1/w, 1/z).
Complex pfm_eval(PFMIndex idx, const OmegaPoint& p);

// Jacobi-polynomial form, finite coordinates only.
Complex pfm_eval_jacobi(PFMIndex idx, const OmegaPoint& p);

// Fourier-coefficient form of the generalized Poisson kernel power, for
// |z| < 1, |w| < 1; uniform trapezoid rule with `nodes` points.
Complex pfm_fourier_integral(PFMIndex idx, Complex z, Complex w, int nodes);

// f_{p,q}(z,w) = z^p w^q / (1 - zw)^max(p,q), with the continuous extension
// at infinite coordinates.
Complex f_pq_eval(long p, long q, const OmegaPoint& pt);

// 4 (1 - zw)^2 d_z d_w F by fourth-order central differences; the step is
// h_base scaled by |1 - zw| at the point.
Complex laplacian_zw(const Evaluator& F, const OmegaPoint& pt, double h_base = 1e-4);

// max over samples of |Lap P - 4m(m+1) P| / (1 + |P|)
double eigen_residual(PFMIndex idx, std::span<const OmegaPoint> samples, double h_base = 1e-4);

// P(xi z, w / xi) == xi^{-n} P(z, w) within tol; xi unimodular.
bool homogeneity_check(PFMIndex idx, const OmegaPoint& pt, Complex xi, double tol = 1e-12);

// Normalization of the orthonormal mode Y_n^{-m}:
// sqrt(2m+1) * i^{|n|} * sqrt(C(m+|n|,|n|) / C(m,|n|)) -- principal branch of
// the negative-binomial square root.
Complex y_factor(PFMIndex idx);

// Y_n^{-m}(p) = y_factor * P_n^{-m}(p)
Complex y_eval(PFMIndex idx, const OmegaPoint& p);

Evaluator pfm_evaluator(PFMIndex idx);
Evaluator f_pq_evaluator(long p, long q);

}  // namespace omega
