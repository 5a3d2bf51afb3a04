#pragma once

#include <array>
#include <map>
#include <span>

#include "omega/exact.hpp"
#include "omega/omega_point.hpp"
#include "omega/pfm.hpp"
#include "omega/quadrature.hpp"

namespace omega {

/// A point of the complex two-sphere z1^2 + z2^2 + z3^2 = 1.
struct SpherePointC {
    Complex z1, z2, z3;

    Complex sphere_defect() const { return z1 * z1 + z2 * z2 + z3 * z3 - 1.0; }
};

// Biholomorphism Omega -> sphere (three charts).
SpherePointC stereo(const OmegaPoint& p);

// Complex stereographic projection, inverse of stereo.
OmegaPoint stereo_inv(const SpherePointC& s, double tol = 1e-12);

// Principal square root of z1^2+z2^2+z3^2; errors on the branch cut
// (non-positive real axis).
Complex complex_norm(Complex z1, Complex z2, Complex z3);

// Spherical Poisson Fourier mode Q_n^{-m} = P_n^{-m} o stereo_inv.
Complex spfm_eval(PFMIndex idx, const SpherePointC& s);

// (-1)^m ((-+ z1 + i z2)/2)^{|n|} P_{m-|n|}^{(|n|,|n|)}(z3); upper sign for
// n >= 0, lower for n < 0.
Complex csh_closed_form(PFMIndex idx, const SpherePointC& s);

/// Finitely supported trivariate polynomial with exact Gaussian-rational
/// coefficients.
struct TrivariatePoly {
    std::map<std::array<long, 3>, Gaussian> terms;

    void add(std::array<long, 3> e, const Gaussian& c);
    long degree() const;
    bool is_zero() const;
    bool is_homogeneous(long deg) const;
    Complex eval(Complex z1, Complex z2, Complex z3) const;
    TrivariatePoly operator*(const TrivariatePoly& o) const;
};

// The m-homogeneous harmonic polynomial whose sphere restriction is the
// complex spherical harmonic of index (m, n), built from the Jacobi parity
// expansion.
TrivariatePoly harmonic_polynomial(long m, long n);

// Sum of the three second partial derivatives, exact.
TrivariatePoly laplacian_C3(const TrivariatePoly& poly);

// max deviation of the numeric real-sphere Gram matrix of the Q_n^{-m} from
// the closed form, pulled back through stereo to the diagonal quadrature.
double sphere_gram_check(long m_max, const SphereQuadrature& q);

// Lower-sheet hyperboloid samples map to the diagonal {(z, conj z), |z|<1};
// upper-sheet samples land outside the closed disk.
bool hyperboloid_check(std::span<const SpherePointC> samples, double tol = 1e-12);

}  // namespace omega
