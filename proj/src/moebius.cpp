#include "omega/moebius.hpp"

#include <cmath>

namespace omega {

ExtendedComplex SphereMoebius::operator()(const ExtendedComplex& zeta) const {
    if (zeta.inf) {
        if (c == Complex{0.0, 0.0}) return ExtendedComplex::infinity();
        return ExtendedComplex{a / c};
    }
    Complex den = c * zeta.v + d;
    if (den == Complex{0.0, 0.0}) return ExtendedComplex::infinity();
    return ExtendedComplex{(a * zeta.v + b) / den};
}

SphereMoebius SphereMoebius::normalized() const {
    Complex s = std::sqrt(det());
    if (s == Complex{0.0, 0.0}) throw std::domain_error("SphereMoebius: singular matrix");
    return {a / s, b / s, c / s, d / s};
}

SphereMoebius operator*(const SphereMoebius& A, const SphereMoebius& B) {
    return {A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d, A.c * B.a + A.d * B.c,
            A.c * B.b + A.d * B.d};
}

OmegaPoint apply(const MoebiusMap& T, const OmegaPoint& p) {
    const ExtendedComplex& first = (T.family == Family::direct) ? p.z : p.w;
    const ExtendedComplex& second = (T.family == Family::direct) ? p.w : p.z;
    OmegaPoint out{T.psi(first), T.psi.sigma()(second)};
    if (!in_omega(out, 0.0)) throw std::logic_error("apply: image left Omega");
    return out;
}

MoebiusMap t_zw(Complex z, Complex w) {
    if (std::abs(1.0 - z * w) <= 1e-12) throw std::domain_error("t_zw: zw = 1");
    // psi(u) = (z - u) / (1 - w u)
    return {SphereMoebius{-1.0, z, -w, 1.0}, Family::direct};
}

MoebiusMap flip_map() { return {SphereMoebius{0.0, 1.0, 1.0, 0.0}, Family::swapped}; }

MoebiusMap swap_map() { return {SphereMoebius::identity(), Family::swapped}; }

MoebiusMap rho(Complex gamma) {
    if (gamma == Complex{0.0, 0.0}) throw std::domain_error("rho: gamma must be nonzero");
    return {SphereMoebius{gamma, 0.0, 0.0, 1.0}, Family::direct};
}

MoebiusMap identity_map() { return {SphereMoebius::identity(), Family::direct}; }

MoebiusMap t_tilde(const ExtendedComplex& z, const ExtendedComplex& w) {
    if (z.is_zero() || w.is_zero()) throw std::domain_error("t_tilde: zero coordinate");
    ExtendedComplex iz = ext_inv(z), iw = ext_inv(w);
    return compose(t_zw(iw.finite(), iz.finite()), flip_map());
}

MoebiusMap compose(const MoebiusMap& T1, const MoebiusMap& T2) {
    MoebiusMap out;
    SphereMoebius rhs = (T1.family == Family::swapped) ? T2.psi.sigma() : T2.psi;
    out.psi = (T1.psi * rhs).normalized();
    out.family = (T1.family == T2.family) ? Family::direct : Family::swapped;
    return out;
}

MoebiusMap inverse(const MoebiusMap& T) {
    if (T.family == Family::direct) return {T.psi.inverse().normalized(), Family::direct};
    // (psi, swapped)^{-1} = (sigma(psi^{-1}), swapped)
    return {T.psi.inverse().sigma().normalized(), Family::swapped};
}

ExtendedComplex cross_ratio(const ExtendedComplex& u1, const ExtendedComplex& u2,
                            const ExtendedComplex& u3, const ExtendedComplex& u4) {
    // Infinite points (all equal to the single point at infinity) are moved
    // into the finite plane by the invariance-preserving substitution
    // zeta -> 1/(zeta - c) with c distinct from every input.
    const ExtendedComplex* pts[4] = {&u1, &u2, &u3, &u4};
    Complex v[4];
    bool any_inf = u1.inf || u2.inf || u3.inf || u4.inf;
    if (any_inf) {
        double mx = 0.0;
        for (auto* p : pts)
            if (!p->inf) mx = std::max(mx, std::abs(p->v));
        Complex c{mx + 1.7, 0.31};
        for (int i = 0; i < 4; ++i) v[i] = pts[i]->inf ? Complex{0.0, 0.0} : 1.0 / (pts[i]->v - c);
    } else {
        for (int i = 0; i < 4; ++i) v[i] = pts[i]->v;
    }
    Complex num = (v[0] - v[2]) * (v[1] - v[3]);
    Complex den = (v[0] - v[3]) * (v[1] - v[2]);
    if (num == Complex{0.0, 0.0} && den == Complex{0.0, 0.0})
        throw std::domain_error("cross_ratio: indeterminate configuration");
    if (den == Complex{0.0, 0.0}) return ExtendedComplex::infinity();
    return ExtendedComplex{num / den};
}

bool two_point_transitive(const OmegaPoint& p1, const OmegaPoint& p2, const OmegaPoint& q1,
                          const OmegaPoint& q2, double tol) {
    ExtendedComplex a = cross_ratio(p1.z, ext_inv(p1.w), p2.z, ext_inv(p2.w));
    ExtendedComplex b = cross_ratio(q1.z, ext_inv(q1.w), q2.z, ext_inv(q2.w));
    if (a.inf || b.inf) return a.inf && b.inf;
    return std::abs(a.v - b.v) <= tol * (1.0 + std::abs(a.v));
}

double laplace_invariance_residual(const MoebiusMap& T, const Evaluator& F,
                                   std::span<const OmegaPoint> samples, double h_base) {
    Evaluator FoT = [&](const OmegaPoint& p) { return F(apply(T, p)); };
    double worst = 0.0;
    for (const OmegaPoint& p : samples) {
        Complex lhs = laplacian_zw(FoT, p, h_base);
        Complex rhs = laplacian_zw(F, apply(T, p), h_base);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

PullbackExpansion pullback_expand(long m, const MoebiusMap& T,
                                  std::span<const OmegaPoint> samples) {
    //   P_0^{-m} o T_psi       = sum_j r_j P_{-j}^{-m}(V) P_j^{-m}
    //   P_0^{-m} o (T_psi o S) = sum_j r_j P_{+j}^{-m}(V) P_j^{-m}
    // with V = (psi^{-1}(0), 1/psi^{-1}(inf)) and
    // r_j = (-m-j)_j / (m-j+1)_j = (-1)^|j| (m+|j|)!(m-|j|)! / (m!)^2;
    // the swapped case follows from the symmetry P_j(w,z) = P_{-j}(z,w).
    SphereMoebius inv = T.psi.inverse();
    ExtendedComplex v1 = inv(ExtendedComplex{Complex{0.0, 0.0}});
    ExtendedComplex v2 = ext_inv(inv(ExtendedComplex::infinity()));
    OmegaPoint value_point{v1, v2};
    if (!in_omega(value_point)) throw std::logic_error("pullback_expand: value point outside Omega");
    PullbackExpansion out;
    out.coeffs.resize(2 * m + 1);
    for (long j = -m; j <= m; ++j) {
        long aj = std::labs(j);
        double r = to_double(factorial(m + aj) * factorial(m - aj) / (factorial(m) * factorial(m)));
        if (aj % 2 != 0) r = -r;
        long value_index = (T.family == Family::direct) ? -j : j;
        out.coeffs[j + m] = r * pfm_eval({m, value_index}, value_point);
    }
    for (const OmegaPoint& p : samples) {
        Complex lhs = pfm_eval({m, 0}, apply(T, p));
        Complex rhs{0.0, 0.0};
        for (long j = -m; j <= m; ++j) rhs += out.coeffs[j + m] * pfm_eval({m, j}, p);
        out.residual = std::max(out.residual, std::abs(lhs - rhs));
    }
    return out;
}

std::optional<NormalForm> normal_form(const MoebiusMap& T) {
    // strip the flip off swapped-family elements: T = T' o F with T' direct
    SphereMoebius psi = T.psi;
    bool has_flip = (T.family == Family::swapped);
    if (has_flip) psi = psi * SphereMoebius{0.0, 1.0, 1.0, 0.0};  // psi . J
    SphereMoebius inv = psi.inverse();
    ExtendedComplex alpha = inv(ExtendedComplex{Complex{0.0, 0.0}});
    ExtendedComplex pole = inv(ExtendedComplex::infinity());
    if (alpha.inf || pole.is_zero()) return std::nullopt;
    Complex beta = pole.inf ? Complex{0.0, 0.0} : 1.0 / pole.v;
    // kappa from a probe point where psi_{alpha,beta} is finite and nonzero
    SphereMoebius pab{-1.0, alpha.v, -beta, 1.0};
    for (double probe : {0.0, 1.0, -1.0, 2.0, 0.5, -0.37}) {
        ExtendedComplex base = pab(ExtendedComplex{Complex{probe, 0.0}});
        ExtendedComplex img = psi(ExtendedComplex{Complex{probe, 0.0}});
        if (base.inf || img.inf || base.is_zero(1e-14)) continue;
        return NormalForm{img.v / base.v, alpha.v, beta, has_flip};
    }
    return std::nullopt;
}

InvarianceScalars invariance_scalars(const MoebiusMap& T, const OmegaPoint& uv) {
    auto nf = normal_form(T);
    if (!nf) throw std::domain_error("invariance_scalars: no normal form for this element");
    if (!uv.both_finite())
        throw std::domain_error("invariance_scalars: finite base point required");
    Complex u = uv.z.v, v = uv.w.v;
    if (!nf->has_flip) {
        Complex den = 1.0 - nf->beta * u;
        if (den == Complex{0.0, 0.0})
            throw std::domain_error("invariance_scalars: u = 1/beta degenerate case");
        return {nf->kappa * (nf->alpha * v - 1.0) / den, 0};
    }
    Complex den = v - nf->beta;
    if (den == Complex{0.0, 0.0})
        throw std::domain_error("invariance_scalars: v = beta degenerate case");
    return {nf->kappa * (nf->alpha - u) / den, 1};
}

}  // namespace omega
