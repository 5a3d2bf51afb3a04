#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

namespace omega {

using Complex = std::complex<double>;

/// A point of the Riemann sphere: a finite complex value or the point at
/// infinity.
struct ExtendedComplex {
    Complex v{0.0, 0.0};
    bool inf = false;

    ExtendedComplex() = default;
    ExtendedComplex(Complex value) : v(value) {}
    ExtendedComplex(double value) : v(value, 0.0) {}

    static ExtendedComplex infinity() {
        ExtendedComplex e;
        e.inf = true;
        return e;
    }

    bool is_zero(double tol = 0.0) const { return !inf && std::abs(v) <= tol; }

    Complex finite() const {
        if (inf) throw std::domain_error("ExtendedComplex: value is infinite");
        return v;
    }
};

// 1/z with 1/0 = inf and 1/inf = 0.
ExtendedComplex ext_inv(const ExtendedComplex& z);

// z - w for cross-ratio arithmetic; inf - finite = inf, inf - inf is an error.
ExtendedComplex ext_sub(const ExtendedComplex& a, const ExtendedComplex& b);

/// A point (z, w) of Omega = { z*w != 1 } on the sphere squared, under the
/// convention inf*0 = 0*inf = 1 and inf*z = inf for z != 0.
struct OmegaPoint {
    ExtendedComplex z, w;

    OmegaPoint() = default;
    OmegaPoint(ExtendedComplex zz, ExtendedComplex ww) : z(zz), w(ww) {}
    OmegaPoint(Complex zz, Complex ww) : z(zz), w(ww) {}

    bool both_finite() const { return !z.inf && !w.inf; }
    OmegaPoint swapped() const { return {w, z}; }
};

// Membership test: z*w != 1 with the infinity conventions; finite products
// within `tol` of 1 count as outside the domain.
bool in_omega(const OmegaPoint& p, double tol = 1e-12);

// Validating constructor.
OmegaPoint omega_point(ExtendedComplex z, ExtendedComplex w, double tol = 1e-12);

// Rotated diagonal z |-> (z, -conj z) and diagonal z |-> (z, conj z).
OmegaPoint rotated_diagonal(const ExtendedComplex& z);
OmegaPoint diagonal(Complex z);

using Evaluator = std::function<Complex(const OmegaPoint&)>;

}  // namespace omega
