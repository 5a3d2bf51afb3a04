#pragma once

#include <vector>

#include "omega/exact.hpp"
#include "omega/omega_point.hpp"
#include "omega/pfm.hpp"

namespace omega {

/// Product rule for (i/pi) integrals over the rotated diagonal: Gauss-Legendre
/// in the radial variable u = s/(1+s) on [0,1] (where the measure is exactly
/// Lebesgue) times a uniform trapezoid rule in the angle.
struct SphereQuadrature {
    std::vector<double> radial_nodes;    // in (0,1)
    std::vector<double> radial_weights;  // sum to 1
    int angular = 0;

    static SphereQuadrature make(int radial_order, int angular_count);

    // Rotated-diagonal point for node (r, a): z = sqrt(u/(1-u)) e^{it}.
    OmegaPoint node(int r, int a) const;
};

// <F, G>_Omega = (i/pi) integral of F(z,-conj z) conj(G(z,-conj z)) dmu
Complex inner_product(const Evaluator& F, const Evaluator& G, const SphereQuadrature& q);

// (i/pi) integral of h over the rotated diagonal, no conjugation.
Complex integrate_diagonal(const Evaluator& h, const SphereQuadrature& q);

// Closed-form diagonal Gram entry C(m,|n|) / ((2m+1) C(m+|n|,|n|)).
Rat gram_closed_form(long m, long n);

// max |numeric <P_n^{-m}, P_q^{-p}> - closed form| over all modes up to m_max
double gram_check(long m_max, const SphereQuadrature& q);

// c_{n,m}(F) = (2m+1) C(m+|n|,|n|) C(m,|n|)^{-1} <F, P_n^{-m}>
Complex schauder_coefficient(const Evaluator& F, long m, long n, const SphereQuadrature& q);

struct CoefficientTable {
    long max_m = 0;
    int radial_order = 0;
    int angular = 0;
    double residual = 0.0;  // max reconstruction error on a fixed diagonal grid

    struct Entry {
        long m = 0, n = 0;
        Complex c;
    };
    std::vector<Entry> entries;  // sorted by (m, n)
};

CoefficientTable decompose(const Evaluator& F, long m_max, const SphereQuadrature& q);

Complex reconstruct(const CoefficientTable& table, const OmegaPoint& pt);

// The fixed 100-point rotated-diagonal grid used for decomposition residuals.
std::vector<OmegaPoint> residual_grid();

}  // namespace omega
