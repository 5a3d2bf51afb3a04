#include "omega/zonal.hpp"

#include <cmath>

#include "omega/jacobi.hpp"
#include "omega/sphere.hpp"

namespace omega {

ZonalEvaluator ZonalEvaluator::make(long m) {
    ZonalEvaluator z;
    z.m = m;
    z.factors.resize(2 * m + 1);
    for (long n = -m; n <= m; ++n) z.factors[n + m] = y_factor({m, n});
    return z;
}

Complex ZonalEvaluator::operator()(const OmegaPoint& p1, const OmegaPoint& p2) const {
    Complex acc{0.0, 0.0};
    for (long j = -m; j <= m; ++j)
        acc += factors[j + m] * pfm_eval({m, j}, p1) * factors[-j + m] * pfm_eval({m, -j}, p2);
    return acc;
}

Complex zonal_sum(long m, const OmegaPoint& p1, const OmegaPoint& p2) {
    return ZonalEvaluator::make(m)(p1, p2);
}

Complex zonal_pullback(long m, const OmegaPoint& p1, const OmegaPoint& p2) {
    double scale = static_cast<double>(2 * m + 1);
    if (p2.both_finite()) {
        MoebiusMap T = t_zw(p2.z.v, p2.w.v);
        return scale * pfm_eval({m, 0}, apply(T, p1));
    }
    if (!p2.z.is_zero() && !p2.w.is_zero()) {
        MoebiusMap T = t_tilde(p2.z, p2.w);
        return scale * pfm_eval({m, 0}, apply(T, p1));
    }
    // on Omega one of the two branches always applies: a zero coordinate
    // forces the partner finite (inf would give product 1)
    throw std::logic_error("zonal_pullback: no applicable branch");
}

double zonal_invariance_residual(long m, const MoebiusMap& T,
                                 std::span<const std::pair<OmegaPoint, OmegaPoint>> pairs) {
    ZonalEvaluator Z = ZonalEvaluator::make(m);
    double worst = 0.0;
    for (const auto& [p1, p2] : pairs) {
        Complex before = Z(p1, p2);
        Complex after = Z(apply(T, p1), apply(T, p2));
        worst = std::max(worst, std::abs(after - before));
    }
    return worst;
}

double fixed_point_invariance(long m, const OmegaPoint& uv, Complex gamma,
                              std::span<const OmegaPoint> samples) {
    if (!uv.both_finite()) throw std::domain_error("fixed_point_invariance: finite point required");
    MoebiusMap Tuv = t_zw(uv.z.v, uv.w.v);
    MoebiusMap stab = compose(Tuv, compose(rho(gamma), Tuv));
    ZonalEvaluator Z = ZonalEvaluator::make(m);
    double worst = 0.0;
    for (const OmegaPoint& p : samples)
        worst = std::max(worst, std::abs(Z(apply(stab, p), uv) - Z(p, uv)));
    return worst;
}

double reproducing_residual(long m, const Evaluator& F, const OmegaPoint& pt,
                            const SphereQuadrature& q) {
    ZonalEvaluator Z = ZonalEvaluator::make(m);
    Evaluator kernel = [&](const OmegaPoint& node) { return F(node) * Z(pt, node); };
    Complex integral = integrate_diagonal(kernel, q);
    return std::abs(integral - F(pt));
}

namespace {

double legendre_form(long m, const SpherePointC& x, const SpherePointC& y, double imag_tol,
                     const char* who) {
    Complex ip = x.z1 * y.z1 + x.z2 * y.z2 + x.z3 * y.z3;
    double scale = static_cast<double>(2 * m + 1);
    if (std::abs(ip.imag()) > imag_tol * scale)
        throw std::domain_error(std::string(who) + ": imaginary residue exceeds tolerance");
    JacobiPoly leg = jacobi_poly(m, rat(0), rat(0));
    return scale * leg.eval(ip.real());
}

}  // namespace

double zonal_sphere(long m, const ExtendedComplex& z, const ExtendedComplex& u, double imag_tol) {
    SpherePointC x = stereo(rotated_diagonal(z));
    SpherePointC y = stereo(rotated_diagonal(u));
    return legendre_form(m, x, y, imag_tol, "zonal_sphere");
}

double zonal_disk(long m, Complex z, Complex u, double imag_tol) {
    if (std::abs(z) >= 1.0 || std::abs(u) >= 1.0)
        throw std::domain_error("zonal_disk: arguments must lie in the unit disk");
    Complex value = zonal_pullback(m, diagonal(z), diagonal(u));
    double scale = static_cast<double>(2 * m + 1);
    if (std::abs(value.imag()) > imag_tol * scale)
        throw std::domain_error("zonal_disk: imaginary residue exceeds tolerance");
    return value.real();
}

}  // namespace omega
