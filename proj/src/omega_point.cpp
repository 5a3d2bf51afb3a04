#include "omega/omega_point.hpp"

namespace omega {

ExtendedComplex ext_inv(const ExtendedComplex& z) {
    if (z.inf) return ExtendedComplex{Complex{0.0, 0.0}};
    if (z.v == Complex{0.0, 0.0}) return ExtendedComplex::infinity();
    return ExtendedComplex{1.0 / z.v};
}

ExtendedComplex ext_sub(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.inf && b.inf) throw std::domain_error("ext_sub: inf - inf");
    if (a.inf || b.inf) return ExtendedComplex::infinity();
    return ExtendedComplex{a.v - b.v};
}

bool in_omega(const OmegaPoint& p, double tol) {
    if (p.z.inf && p.w.inf) return true;              // inf * inf = inf != 1
    if (p.z.inf) return !(p.w.v == Complex{0.0, 0.0});  // inf * 0 = 1
    if (p.w.inf) return !(p.z.v == Complex{0.0, 0.0});
    return std::abs(1.0 - p.z.v * p.w.v) > tol;
}

OmegaPoint omega_point(ExtendedComplex z, ExtendedComplex w, double tol) {
    OmegaPoint p{z, w};
    if (!in_omega(p, tol)) throw std::domain_error("point outside Omega: z*w = 1");
    return p;
}

OmegaPoint rotated_diagonal(const ExtendedComplex& z) {
    if (z.inf) return {ExtendedComplex::infinity(), ExtendedComplex::infinity()};
    return {z, ExtendedComplex{-std::conj(z.v)}};
}

OmegaPoint diagonal(Complex z) { return {ExtendedComplex{z}, ExtendedComplex{std::conj(z)}}; }

}  // namespace omega
