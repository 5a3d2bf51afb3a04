#include "omega/pfm.hpp"

#include <cmath>
#include <numbers>

#include "omega/jacobi.hpp"

namespace omega {

namespace {

Complex pow_int(Complex z, long k) {
    if (k < 0) return 1.0 / pow_int(z, -k);
    Complex r{1.0, 0.0};
    while (k > 0) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

// C(m, k) as double; m stays small enough for exact doubles
double binom_d(long m, long k) { return to_double(binomial(m, k)); }

Complex pfm_finite(long m, long n, Complex z, Complex w) {
    if (n < 0) {
        std::swap(z, w);
        n = -n;
    }
    Complex zw = z * w;
    Complex acc{0.0, 0.0};
    Complex zk{1.0, 0.0};
    Complex wkn = pow_int(w, n);
    for (long k = 0; k <= m - n; ++k) {
        acc += binom_d(m, k + n) * binom_d(m, k) * zk * wkn;
        zk *= z;
        wkn *= w;
    }
    Complex val = acc / pow_int(1.0 - zw, m);
    return (n % 2 != 0) ? -val : val;
}

}  // namespace

Complex pfm_eval(PFMIndex idx, const OmegaPoint& p) {
    if (!in_omega(p)) throw std::domain_error("pfm_eval: point outside Omega");
    if (idx.vanishes()) return {0.0, 0.0};
    if (p.both_finite()) return pfm_finite(idx.m, idx.n, p.z.v, p.w.v);
    OmegaPoint q{ext_inv(p.w), ext_inv(p.z)};
    Complex val = pfm_eval(idx, q);
    return (idx.m % 2 != 0) ? -val : val;
}

Complex pfm_eval_jacobi(PFMIndex idx, const OmegaPoint& p) {
    if (!p.both_finite()) throw std::domain_error("pfm_eval_jacobi: finite coordinates required");
    if (!in_omega(p)) throw std::domain_error("pfm_eval_jacobi: point outside Omega");
    if (idx.vanishes()) return {0.0, 0.0};
    long an = std::labs(idx.n);
    Complex z = p.z.v, w = p.w.v, zw = z * w;
    JacobiPoly jac = jacobi_poly(idx.m - an, rat(an), rat(an));
    Complex val = jac.eval((zw + 1.0) / (zw - 1.0)) / pow_int(1.0 - zw, an);
    if (idx.m % 2 != 0) val = -val;
    return val * (idx.n >= 0 ? pow_int(w, idx.n) : pow_int(z, an));
}

Complex pfm_fourier_integral(PFMIndex idx, Complex z, Complex w, int nodes) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
        throw std::domain_error("pfm_fourier_integral: arguments must lie in the open bidisk");
    if (nodes < 1) throw std::domain_error("pfm_fourier_integral: nodes must be positive");
    Complex zw = z * w;
    Complex acc{0.0, 0.0};
    for (int j = 0; j < nodes; ++j) {
        double t = 2.0 * std::numbers::pi * j / nodes;
        Complex eit = std::polar(1.0, t);
        Complex kernel = (1.0 - z / eit) * (1.0 - w * eit) / (1.0 - zw);
        acc += pow_int(kernel, idx.m) * std::polar(1.0, -static_cast<double>(idx.n) * t);
    }
    return acc / static_cast<double>(nodes);
}

Complex f_pq_eval(long p, long q, const OmegaPoint& pt) {
    if (!in_omega(pt)) throw std::domain_error("f_pq_eval: point outside Omega");
    if (p < 0 || q < 0) throw std::domain_error("f_pq_eval: negative index");
    if (p > q) return f_pq_eval(q, p, pt.swapped());
    // now p <= q, max{p,q} = q
    if (pt.both_finite()) {
        Complex z = pt.z.v, w = pt.w.v;
        return pow_int(z, p) * pow_int(w, q) / pow_int(1.0 - z * w, q);
    }
    double sign = (q % 2 != 0) ? -1.0 : 1.0;
    if (pt.w.inf && !pt.z.inf) {
        // limit along w -> inf: (-1)^q z^(p-q)
        return sign * pow_int(pt.z.v, p - q);
    }
    // z = inf (w finite or infinite): degree in z of the denominator wins
    if (p == q) return {sign, 0.0};
    return {0.0, 0.0};
}

Complex laplacian_zw(const Evaluator& F, const OmegaPoint& pt, double h_base) {
    if (!pt.both_finite()) throw std::domain_error("laplacian_zw: finite interior point required");
    Complex z = pt.z.v, w = pt.w.v;
    Complex one_minus = 1.0 - z * w;
    double h = h_base * std::abs(one_minus);
    if (h == 0.0) throw std::domain_error("laplacian_zw: degenerate step");
    static constexpr int offs[4] = {-2, -1, 1, 2};
    static constexpr double wts[4] = {1.0, -8.0, 8.0, -1.0};
    Complex acc{0.0, 0.0};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            OmegaPoint q{Complex{z + static_cast<double>(offs[a]) * h}, Complex{w + static_cast<double>(offs[b]) * h}};
            if (!in_omega(q)) throw std::domain_error("laplacian_zw: stencil leaves Omega");
            acc += wts[a] * wts[b] * F(q);
        }
    }
    Complex mixed = acc / (144.0 * h * h);
    return 4.0 * one_minus * one_minus * mixed;
}

double eigen_residual(PFMIndex idx, std::span<const OmegaPoint> samples, double h_base) {
    double lambda = static_cast<double>(idx.eigenvalue());
    Evaluator F = pfm_evaluator(idx);
    double worst = 0.0;
    for (const OmegaPoint& p : samples) {
        Complex val = F(p);
        Complex lap = laplacian_zw(F, p, h_base);
        double err = std::abs(lap - lambda * val) / (1.0 + std::abs(val));
        worst = std::max(worst, err);
    }
    return worst;
}

bool homogeneity_check(PFMIndex idx, const OmegaPoint& pt, Complex xi, double tol) {
    OmegaPoint scaled{Complex{xi * pt.z.finite()}, Complex{pt.w.finite() / xi}};
    if (!in_omega(scaled)) throw std::domain_error("homogeneity_check: scaled point outside Omega");
    Complex lhs = pfm_eval(idx, scaled);
    Complex rhs = pow_int(xi, -idx.n) * pfm_eval(idx, pt);
    return std::abs(lhs - rhs) <= tol * (1.0 + std::abs(rhs));
}

Complex y_factor(PFMIndex idx) {
    long an = std::labs(idx.n);
    if (an > idx.m) throw std::domain_error("y_factor: |n| > m");
    double ratio = to_double(binomial(idx.m + an, an) / binomial(idx.m, an));
    Complex i_an = (an % 4 == 0)   ? Complex{1.0, 0.0}
                   : (an % 4 == 1) ? Complex{0.0, 1.0}
                   : (an % 4 == 2) ? Complex{-1.0, 0.0}
                                   : Complex{0.0, -1.0};
    return std::sqrt(static_cast<double>(2 * idx.m + 1)) * i_an * std::sqrt(ratio);
}

Complex y_eval(PFMIndex idx, const OmegaPoint& p) {
    if (idx.vanishes()) return {0.0, 0.0};
    return y_factor(idx) * pfm_eval(idx, p);
}

Evaluator pfm_evaluator(PFMIndex idx) {
    return [idx](const OmegaPoint& p) { return pfm_eval(idx, p); };
}

Evaluator f_pq_evaluator(long p, long q) {
    return [p, q](const OmegaPoint& pt) { return f_pq_eval(p, q, pt); };
}

}  // namespace omega
