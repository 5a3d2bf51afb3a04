#pragma once

#include <span>
#include <utility>
#include <vector>

#include "omega/moebius.hpp"
#include "omega/omega_point.hpp"
#include "omega/pfm.hpp"
#include "omega/quadrature.hpp"

namespace omega {

/// Degree-m zonal kernel with the Y-normalization factors precomputed.
struct ZonalEvaluator {
    long m = 0;
    std::vector<Complex> factors;  // y_factor for n = -m..m, stored at n + m

    static ZonalEvaluator make(long m);
    Complex operator()(const OmegaPoint& p1, const OmegaPoint& p2) const;
};

// Z_m(p1, p2) = sum_j Y_j^{-m}(p1) Y_{-j}^{-m}(p2)
Complex zonal_sum(long m, const OmegaPoint& p1, const OmegaPoint& p2);

// Z_m(p1, p2) = (2m+1) (P_0^{-m} o T_{u,v})(p1), via the T branch for finite
// (u, v) and the T~ branch for nonzero (u, v).
Complex zonal_pullback(long m, const OmegaPoint& p1, const OmegaPoint& p2);

// max |Z_m(T p1, T p2) - Z_m(p1, p2)| over the pairs
double zonal_invariance_residual(long m, const MoebiusMap& T,
                                 std::span<const std::pair<OmegaPoint, OmegaPoint>> pairs);

// Invariance of Z_m(., uv) under the stabilizer element T_{u,v} o rho_gamma o T_{u,v}.
double fixed_point_invariance(long m, const OmegaPoint& uv, Complex gamma,
                              std::span<const OmegaPoint> samples);

// |(i/pi) integral f(eta,-conj eta) Z_m(pt, (eta,-conj eta)) dmu - f(pt)|
double reproducing_residual(long m, const Evaluator& F, const OmegaPoint& pt,
                            const SphereQuadrature& q);

// Restriction to the rotated diagonal: (2m+1) P_m^(0,0)(<x,y>) with
// x = S(z,-conj z), y = S(u,-conj u); real up to the stated tolerance.
double zonal_sphere(long m, const ExtendedComplex& z, const ExtendedComplex& u,
                    double imag_tol = 1e-11);

// Restriction to the diagonal over the unit disk.
double zonal_disk(long m, Complex z, Complex u, double imag_tol = 1e-11);

}  // namespace omega
