#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "omega/omega_point.hpp"
#include "omega/pfm.hpp"

namespace omega {

/// Moebius transformation of the Riemann sphere, zeta -> (a zeta + b)/(c zeta + d).
struct SphereMoebius {
    Complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    ExtendedComplex operator()(const ExtendedComplex& zeta) const;
    Complex det() const { return a * d - b * c; }
    SphereMoebius inverse() const { return {d, -b, -c, a}; }
    // conjugate action on the second Omega coordinate: w -> 1/psi(1/w)
    SphereMoebius sigma() const { return {d, c, b, a}; }
    SphereMoebius normalized() const;  // scale to det 1
    static SphereMoebius identity() { return {}; }
};

SphereMoebius operator*(const SphereMoebius& A, const SphereMoebius& B);

enum class Family { direct, swapped };

/// Automorphism of Omega: (z,w) -> (psi(z), 1/psi(1/w)) in the direct family,
/// (z,w) -> (psi(w), 1/psi(1/z)) in the swapped family.
struct MoebiusMap {
    SphereMoebius psi;
    Family family = Family::direct;
};

OmegaPoint apply(const MoebiusMap& T, const OmegaPoint& p);

// Involution exchanging (z, w) with (0, 0); requires zw != 1, z, w finite.
MoebiusMap t_zw(Complex z, Complex w);

// T_{1/w,1/z} o flip; exchanges (z, w) with (0, 0) for nonzero coordinates.
MoebiusMap t_tilde(const ExtendedComplex& z, const ExtendedComplex& w);

MoebiusMap flip_map();              // (z,w) -> (1/w, 1/z)
MoebiusMap swap_map();              // (z,w) -> (w, z)
MoebiusMap rho(Complex gamma);      // (z,w) -> (gamma z, w / gamma)
MoebiusMap identity_map();

MoebiusMap compose(const MoebiusMap& T1, const MoebiusMap& T2);
MoebiusMap inverse(const MoebiusMap& T);

// [u1,u2,u3,u4] = (u1-u3)(u2-u4) / ((u1-u4)(u2-u3)) with infinity limits.
ExtendedComplex cross_ratio(const ExtendedComplex& u1, const ExtendedComplex& u2,
                            const ExtendedComplex& u3, const ExtendedComplex& u4);

// A Moebius map of Omega sends (p1, p2) to (q1, q2) iff the associated cross
// ratios [z, 1/w, u, 1/v] agree.
bool two_point_transitive(const OmegaPoint& p1, const OmegaPoint& p2, const OmegaPoint& q1,
                          const OmegaPoint& q2, double tol = 1e-10);

// max over samples of |Lap(F o T) - (Lap F) o T|
double laplace_invariance_residual(const MoebiusMap& T, const Evaluator& F,
                                   std::span<const OmegaPoint> samples, double h_base = 1e-4);

/// Coefficients of P_0^{-m} o T in the degree-m eigenspace basis, plus the
/// sampled residual of the expansion identity.
struct PullbackExpansion {
    std::vector<Complex> coeffs;  // index j = -m..m stored at j + m
    double residual = 0.0;
};

PullbackExpansion pullback_expand(long m, const MoebiusMap& T,
                                  std::span<const OmegaPoint> samples);

/// T = rho_kappa o T_{alpha,beta} (o flip when has_flip).
struct NormalForm {
    Complex kappa, alpha, beta;
    bool has_flip = false;
};

// Decomposition into the generator normal form; empty when the element is not
// representable with finite alpha, beta.
std::optional<NormalForm> normal_form(const MoebiusMap& T);

/// Scalars with rho_gamma o S^tau o T_{u,v} = T_{T(u,v)} o T.
struct InvarianceScalars {
    Complex gamma;
    int tau = 0;
};

InvarianceScalars invariance_scalars(const MoebiusMap& T, const OmegaPoint& uv);

}  // namespace omega
