#include "omega/sphere.hpp"

#include <cmath>

#include "omega/jacobi.hpp"

namespace omega {

SpherePointC stereo(const OmegaPoint& p) {
    if (!in_omega(p)) throw std::domain_error("stereo: point outside Omega");
    if (p.z.inf && p.w.inf) return {0.0, 0.0, 1.0};
    if (p.w.inf) {
        Complex z = p.z.v;  // z != 0 since (0, inf) is outside Omega
        return {1.0 / z, Complex{0.0, 1.0} / z, 1.0};
    }
    if (p.z.inf) {
        Complex w = p.w.v;
        return {-1.0 / w, Complex{0.0, 1.0} / w, 1.0};
    }
    Complex z = p.z.v, w = p.w.v;
    Complex d = 1.0 - z * w;
    return {(z - w) / d, Complex{0.0, -1.0} * (z + w) / d, -(1.0 + z * w) / d};
}

OmegaPoint stereo_inv(const SpherePointC& s, double tol) {
    if (std::abs(s.sphere_defect()) > 1e-9)
        throw std::domain_error("stereo_inv: point not on the complex sphere");
    if (std::abs(s.z3 - 1.0) > tol) {
        Complex d = 1.0 - s.z3;
        return {ExtendedComplex{(s.z1 + Complex{0.0, 1.0} * s.z2) / d},
                ExtendedComplex{-(s.z1 - Complex{0.0, 1.0} * s.z2) / d}};
    }
    // chart z3 = 1: z1^2 + z2^2 = 0, so z2 = +- i z1
    if (std::abs(s.z1) <= tol) return {ExtendedComplex::infinity(), ExtendedComplex::infinity()};
    if (std::abs(s.z2 - Complex{0.0, 1.0} * s.z1) <= tol * (1.0 + std::abs(s.z1)))
        return {ExtendedComplex{1.0 / s.z1}, ExtendedComplex::infinity()};
    if (std::abs(s.z2 + Complex{0.0, 1.0} * s.z1) <= tol * (1.0 + std::abs(s.z1)))
        return {ExtendedComplex::infinity(), ExtendedComplex{-1.0 / s.z1}};
    throw std::domain_error("stereo_inv: invalid z3 = 1 chart point");
}

Complex complex_norm(Complex z1, Complex z2, Complex z3) {
    Complex s = z1 * z1 + z2 * z2 + z3 * z3;
    if (s.imag() == 0.0 && s.real() <= 0.0)
        throw std::domain_error("complex_norm: squared length on the branch cut");
    return std::sqrt(s);
}

Complex spfm_eval(PFMIndex idx, const SpherePointC& s) { return pfm_eval(idx, stereo_inv(s)); }

Complex csh_closed_form(PFMIndex idx, const SpherePointC& s) {
    long an = std::labs(idx.n);
    if (an > idx.m) return {0.0, 0.0};
    Complex base = (idx.n >= 0 ? -s.z1 : s.z1) + Complex{0.0, 1.0} * s.z2;
    base *= 0.5;
    Complex pw{1.0, 0.0};
    for (long i = 0; i < an; ++i) pw *= base;
    JacobiPoly jac = jacobi_poly(idx.m - an, rat(an), rat(an));
    Complex val = pw * jac.eval(s.z3);
    return (idx.m % 2 != 0) ? -val : val;
}

void TrivariatePoly::add(std::array<long, 3> e, const Gaussian& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
        if (!(c == Gaussian{})) terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == Gaussian{}) terms.erase(it);
}

long TrivariatePoly::degree() const {
    long d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

bool TrivariatePoly::is_zero() const { return terms.empty(); }

bool TrivariatePoly::is_homogeneous(long deg) const {
    for (const auto& [e, c] : terms)
        if (e[0] + e[1] + e[2] != deg) return false;
    return true;
}

Complex TrivariatePoly::eval(Complex z1, Complex z2, Complex z3) const {
    Complex acc{0.0, 0.0};
    for (const auto& [e, c] : terms) {
        Complex t = c.to_complex();
        for (long i = 0; i < e[0]; ++i) t *= z1;
        for (long i = 0; i < e[1]; ++i) t *= z2;
        for (long i = 0; i < e[2]; ++i) t *= z3;
        acc += t;
    }
    return acc;
}

TrivariatePoly TrivariatePoly::operator*(const TrivariatePoly& o) const {
    TrivariatePoly out;
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms)
            out.add({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return out;
}

TrivariatePoly harmonic_polynomial(long m, long n) {
    long an = std::labs(n);
    if (an > m) throw std::domain_error("harmonic_polynomial: |n| > m");
    JacobiPoly jac = jacobi_poly(m - an, rat(an), rat(an));
    // parity expansion: only x^t with t = (m-an) mod 2 survive; homogenize the
    // complementary degree with powers of z1^2+z2^2+z3^2
    TrivariatePoly radial;
    for (long t = 0; t <= m - an; ++t) {
        if (jac.coeffs[t] == 0) continue;
        long j2 = m - an - t;
        if (j2 % 2 != 0) throw std::logic_error("harmonic_polynomial: parity violation");
        long j = j2 / 2;
        // expand (z1^2 + z2^2 + z3^2)^j * z3^t
        for (long i1 = 0; i1 <= j; ++i1) {
            for (long i2 = 0; i2 + i1 <= j; ++i2) {
                long i3 = j - i1 - i2;
                Rat multi = factorial(j) / (factorial(i1) * factorial(i2) * factorial(i3));
                radial.add({2 * i1, 2 * i2, 2 * i3 + t}, Gaussian{jac.coeffs[t] * multi});
            }
        }
    }
    // ((-+ z1 + i z2)/2)^an, binomially
    TrivariatePoly prefactor;
    Rat half_pow = rat(1);
    for (long i = 0; i < an; ++i) half_pow /= 2;
    for (long r = 0; r <= an; ++r) {
        // (sign z1)^r (i z2)^(an - r)
        Gaussian c = i_power(an - r) * Gaussian{binomial(an, r) * half_pow};
        if (n >= 0 && r % 2 != 0) c = -c;  // upper sign: (-z1)
        prefactor.add({r, an - r, 0}, c);
    }
    TrivariatePoly out = prefactor * radial;
    if (m % 2 != 0) {
        TrivariatePoly neg;
        for (const auto& [e, c] : out.terms) neg.add(e, -c);
        return neg;
    }
    return out;
}

TrivariatePoly laplacian_C3(const TrivariatePoly& poly) {
    TrivariatePoly out;
    for (const auto& [e, c] : poly.terms) {
        for (int k = 0; k < 3; ++k) {
            if (e[k] < 2) continue;
            auto d = e;
            d[k] -= 2;
            out.add(d, c * Gaussian{rat(e[k] * (e[k] - 1))});
        }
    }
    return out;
}

double sphere_gram_check(long m_max, const SphereQuadrature& q) {
    // The normalized area measure on the real sphere pulls back to the
    // diagonal measure under stereo; Q values are taken by composing the maps
    // so both chart directions are exercised.
    std::vector<PFMIndex> modes;
    for (long m = 0; m <= m_max; ++m)
        for (long n = -m; n <= m; ++n) modes.push_back({m, n});
    size_t nr = q.radial_nodes.size();
    size_t na = static_cast<size_t>(q.angular);
    std::vector<std::vector<Complex>> vals(modes.size(), std::vector<Complex>(nr * na));
    for (size_t r = 0; r < nr; ++r) {
        for (size_t a = 0; a < na; ++a) {
            SpherePointC x = stereo(q.node(static_cast<int>(r), static_cast<int>(a)));
            for (size_t k = 0; k < modes.size(); ++k) vals[k][r * na + a] = spfm_eval(modes[k], x);
        }
    }
    double worst = 0.0;
    for (size_t i = 0; i < modes.size(); ++i) {
        for (size_t j = i; j < modes.size(); ++j) {
            Complex acc{0.0, 0.0};
            for (size_t r = 0; r < nr; ++r) {
                Complex ring{0.0, 0.0};
                for (size_t a = 0; a < na; ++a)
                    ring += vals[i][r * na + a] * std::conj(vals[j][r * na + a]);
                acc += q.radial_weights[r] * ring / static_cast<double>(na);
            }
            Complex expect{0.0, 0.0};
            if (modes[i].m == modes[j].m && modes[i].n == modes[j].n)
                expect = to_double(gram_closed_form(modes[i].m, modes[i].n));
            worst = std::max(worst, std::abs(acc - expect));
        }
    }
    return worst;
}

bool hyperboloid_check(std::span<const SpherePointC> samples, double tol) {
    for (const SpherePointC& s : samples) {
        if (std::abs(s.sphere_defect()) > 1e-9)
            throw std::domain_error("hyperboloid_check: sample off the surface");
        double x3 = s.z3.real();
        OmegaPoint p = stereo_inv(s);
        if (p.z.inf || p.w.inf) {
            if (std::abs(x3) < 1.0) return false;
            continue;  // apex of the upper sheet maps to (inf, inf)
        }
        if (std::abs(p.w.v - std::conj(p.z.v)) > tol * (1.0 + std::abs(p.z.v))) return false;
        double r = std::abs(p.z.v);
        if (x3 <= -1.0 && r >= 1.0) return false;
        if (x3 >= 1.0 && r <= 1.0) return false;
    }
    return true;
}

}  // namespace omega
