// Acceptance suite: runs every release gate end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <vector>

#include "omega/basischange.hpp"
#include "omega/catalogue.hpp"
#include "omega/hypergeom.hpp"
#include "omega/moebius.hpp"
#include "omega/pfm.hpp"
#include "omega/quadrature.hpp"
#include "omega/sampling.hpp"
#include "omega/sphere.hpp"
#include "omega/zonal.hpp"

using namespace omega;

namespace {

int g_failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail) {
    std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what, detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

// 1. CID holds exactly for all 0 <= d <= n <= m <= 25 within 60 s
void criterion_cid() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (long m = 0; m <= 25 && ok; ++m) ok = cid_check(m);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, "combinatorial identity, m <= 25, exact", ok && secs < 60.0,
           fmt("runtime %.1f s", secs));
}

// 2. L1 / T1 / T2 exact for m <= 12; T1 and T2 agree on the n = d+s overlap
void criterion_l1() {
    bool ok = true;
    long cases = 0;
    for (long m = 0; m <= 12 && ok; ++m)
        for (long n = 0; n <= m && ok; ++n)
            for (long d = 0; d <= n && ok; ++d) {
                for (long s = 0; s <= m && ok; ++s) {
                    ok = verify_L1(m, n, d, s);
                    ++cases;
                }
                for (long s = 0; s <= n && ok; ++s) {
                    if (n >= d + s) ok = ok && t1_check(m, n, d, s);
                    if (n <= d + s) ok = ok && t2_check(m, n, d, s);
                    if (n == d + s) ok = ok && (t1_check(m, n, d, s) == t2_check(m, n, d, s));
                    ++cases;
                }
            }
    report(2, "t-sum identities L1/T1/T2, m <= 12, exact", ok,
           std::to_string(cases) + " tuples");
}

// 3. Raynal two-term relation for the integer family, m <= 10
void criterion_raynal() {
    bool ok = true;
    long cases = 0;
    for (long m = 0; m <= 10 && ok; ++m)
        for (long n = 0; n <= m && ok; ++n)
            for (long d = 0; d <= n && ok; ++d)
                for (long s = 0; d + s <= n && ok; ++s) {
                    ok = raynal_check(m, n, d, s);
                    ++cases;
                }
    report(3, "Raynal relation, squared and ratio form, m <= 10", ok,
           std::to_string(cases) + " tuples");
}

// 4. Gram matrix within 1e-10 for m, p <= 6 at R = 64, A = 256; the (1,0)
//    diagonal entry equals 1/3 within 1e-12
void criterion_gram() {
    SphereQuadrature q = SphereQuadrature::make(64, 256);
    double dev = gram_check(6, q);
    Complex d10 = inner_product(pfm_evaluator({1, 0}), pfm_evaluator({1, 0}), q);
    double dev10 = std::abs(d10 - Complex{1.0 / 3.0, 0.0});
    report(4, "Gram matrix vs closed form, m <= 6", dev < 1e-10 && dev10 < 1e-12,
           fmt("max dev %.2e", dev) + fmt(", <P,P> dev %.2e", dev10));
}

// 5. eigenfunction residual < 1e-5 over 100 random interior points, m <= 6
void criterion_eigen() {
    Sampler smp(2024);
    std::vector<OmegaPoint> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(smp.omega_point_in_disk());
    double worst = 0.0;
    for (long m = 0; m <= 6; ++m)
        for (long n = -m; n <= m; ++n)
            worst = std::max(worst, eigen_residual({m, n}, pts));
    report(5, "Laplacian eigenfunction residual, m <= 6", worst < 1e-5,
           fmt("max rel residual %.2e", worst));
}

// 6. basis-change round trip exact for m <= 12; coefficient bounds and the
//    partition identity exact for m <= 15
void criterion_roundtrip() {
    bool ok = roundtrip_check(12);
    bool bounds = true;
    for (long m = 0; m <= 15 && bounds; ++m) bounds = a_bound_check(m);
    report(6, "basis-change round trip and coefficient bounds", ok && bounds,
           ok ? "identity matrix reproduced" : "round trip broke");
}

// 7. decompose(f_{1,1}) = {c_{0,1} = 1/2, c_{0,0} = -1/2} within 1e-9; a
//    single mode decomposes to the unit coefficient vector within 1e-9
void criterion_decompose() {
    SphereQuadrature q = SphereQuadrature::make(64, 256);
    double worst = 0.0;
    CoefficientTable t = decompose(f_pq_evaluator(1, 1), 4, q);
    for (const auto& e : t.entries) {
        Complex expect{0.0, 0.0};
        if (e.m == 1 && e.n == 0) expect = {0.5, 0.0};
        if (e.m == 0 && e.n == 0) expect = {-0.5, 0.0};
        worst = std::max(worst, std::abs(e.c - expect));
    }
    for (PFMIndex idx : {PFMIndex{2, 1}, PFMIndex{3, -2}, PFMIndex{4, 0}}) {
        CoefficientTable u = decompose(pfm_evaluator(idx), 5, q);
        for (const auto& e : u.entries) {
            Complex expect = (e.m == idx.m && e.n == idx.n) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            worst = std::max(worst, std::abs(e.c - expect));
        }
    }
    report(7, "Schauder decomposition oracle coefficients", worst < 1e-9,
           fmt("max coeff dev %.2e", worst));
}

// 8. harmonic polynomials are exactly harmonic for m <= 10 and restrict to the
//    spherical modes within 1e-10 at 100 random sphere points
void criterion_csh() {
    bool harmonic = true;
    for (long m = 0; m <= 10 && harmonic; ++m)
        for (long n = -m; n <= m && harmonic; ++n) {
            TrivariatePoly h = harmonic_polynomial(m, n);
            harmonic = laplacian_C3(h).is_zero() && h.is_homogeneous(m);
        }
    Sampler smp(2025);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        SpherePointC x = stereo(smp.omega_point_wide(1.6, 0.2));
        long m = i % 7;
        long n = (i % (2 * m + 1)) - m;
        TrivariatePoly h = harmonic_polynomial(m, n);
        Complex restriction = h.eval(x.z1, x.z2, x.z3);
        worst = std::max(worst, std::abs(restriction - spfm_eval({m, n}, x)));
    }
    report(8, "CSH harmonicity (exact, m <= 10) and restriction", harmonic && worst < 1e-10,
           fmt("max restriction dev %.2e", worst));
}

// 9. stereographic round trips within 1e-12 on 1000 points including the
//    infinity charts; hyperboloid sheets land on the right diagonals
void criterion_stereo() {
    Sampler smp(2026);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        OmegaPoint p;
        switch (i % 5) {
            case 0: p = {ExtendedComplex{smp.disk(2.0) + Complex{0.1, 0.1}},
                         ExtendedComplex::infinity()}; break;
            case 1: p = {ExtendedComplex::infinity(),
                         ExtendedComplex{smp.disk(2.0) + Complex{0.1, 0.1}}}; break;
            case 2: p = {ExtendedComplex::infinity(), ExtendedComplex::infinity()}; break;
            default: p = smp.omega_point_wide(2.5, 0.05);
        }
        SpherePointC s = stereo(p);
        OmegaPoint back = stereo_inv(s);
        double err = std::abs(s.sphere_defect());
        auto coord = [](const ExtendedComplex& a, const ExtendedComplex& b) {
            if (a.inf || b.inf) return (a.inf && b.inf) ? 0.0 : 1.0;
            return std::abs(a.v - b.v) / (1.0 + std::abs(a.v));
        };
        err = std::max({err, coord(p.z, back.z), coord(p.w, back.w)});
        // second direction: sphere -> Omega -> sphere
        SpherePointC s2 = stereo(back);
        err = std::max({err, std::abs(s.z1 - s2.z1), std::abs(s.z2 - s2.z2),
                        std::abs(s.z3 - s2.z3)});
        worst = std::max(worst, err);
    }
    std::vector<SpherePointC> lower, upper;
    for (int i = 0; i < 100; ++i) {
        double t = smp.uniform(0.0, 1.5), phi = smp.uniform(0.0, 2.0 * M_PI);
        Complex ia{0.0, std::sinh(t) * std::cos(phi)}, ib{0.0, std::sinh(t) * std::sin(phi)};
        lower.push_back({ia, ib, -std::cosh(t)});
        upper.push_back({ia, ib, std::cosh(t)});
    }
    bool sheets = hyperboloid_check(lower) && hyperboloid_check(upper);
    report(9, "stereographic round trips and hyperboloid sheets", worst < 1e-12 && sheets,
           fmt("max round-trip dev %.2e", worst));
}

// 10. zonal cross-oracle, definiteness, invariance, sphere bound
void criterion_zonal() {
    Sampler smp(2027);
    double cross = 0.0;
    for (long m = 0; m <= 8; ++m)
        for (int i = 0; i < 100; ++i) {
            OmegaPoint p1 = smp.omega_point_in_disk(0.35, 0.4);
            OmegaPoint p2 = smp.omega_point_in_disk(0.35, 0.4);
            cross = std::max(cross, std::abs(zonal_sum(m, p1, p2) - zonal_pullback(m, p1, p2)));
        }
    double defin = 0.0;
    for (long m = 0; m <= 8; ++m) {
        OmegaPoint p = smp.omega_point_in_disk();
        defin = std::max(defin, std::abs(zonal_pullback(m, p, p) - (2.0 * m + 1.0)));
    }
    std::vector<std::pair<OmegaPoint, OmegaPoint>> pairs;
    for (int i = 0; i < 10; ++i)
        pairs.emplace_back(smp.omega_point_in_disk(0.5, 0.3), smp.omega_point_in_disk(0.5, 0.3));
    double invariance = 0.0;
    for (int i = 0; i < 50; ++i) {
        MoebiusMap T = smp.moebius_map();
        while (!well_conditioned(T, pairs)) T = smp.moebius_map();
        invariance = std::max(invariance, zonal_invariance_residual(4, T, pairs));
    }
    bool bound = true;
    for (long m = 0; m <= 10 && bound; ++m)
        for (int i = 0; i < 50 && bound; ++i)
            for (int j = 0; j < 50 && bound; ++j) {
                ExtendedComplex z{Complex{-2.0 + 4.0 * i / 49.0, 0.9}};
                ExtendedComplex u{Complex{-2.0 + 4.0 * j / 49.0, -1.1}};
                bound = std::abs(zonal_sphere(m, z, u)) <= 2.0 * m + 1.0 + 1e-9;
            }
    bool ok = cross < 1e-10 && defin < 1e-10 && invariance < 1e-9 && bound;
    report(10, "zonal kernel: cross-oracle, definiteness, invariance, bound", ok,
           fmt("cross %.2e", cross) + fmt(", inv %.2e", invariance));
}

// 11. pullback expansion residual < 1e-9 for m <= 6 over 20 random maps
void criterion_pullback() {
    Sampler smp(2028);
    std::vector<OmegaPoint> pts;
    for (int i = 0; i < 50; ++i) pts.push_back(smp.omega_point_in_disk(0.5, 0.3));
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        MoebiusMap T = smp.moebius_map(false);
        for (long m = 0; m <= 6; ++m)
            worst = std::max(worst, pullback_expand(m, T, pts).residual);
    }
    report(11, "pullback expansion of P_0^{-m} o T, m <= 6", worst < 1e-9,
           fmt("max residual %.2e", worst));
}

// 12. Lap(F o T) = (Lap F) o T within 1e-5 for 10 random (T, mode) pairs
void criterion_laplace_invariance() {
    Sampler smp(2029);
    std::vector<OmegaPoint> pts;
    for (int i = 0; i < 20; ++i) pts.push_back(smp.omega_point_in_disk(0.4, 0.35));
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        MoebiusMap T = smp.moebius_map();
        long m = 1 + t % 3;
        long n = (t % (2 * m + 1)) - m;
        worst = std::max(worst, laplace_invariance_residual(T, pfm_evaluator({m, n}), pts));
    }
    report(12, "Moebius invariance of the canonical Laplacian", worst < 1e-5,
           fmt("max residual %.2e", worst));
}

}  // namespace

int main() {
    criterion_cid();
    criterion_l1();
    criterion_raynal();
    criterion_gram();
    criterion_eigen();
    criterion_roundtrip();
    criterion_decompose();
    criterion_csh();
    criterion_stereo();
    criterion_zonal();
    criterion_pullback();
    criterion_laplace_invariance();
    if (g_failures == 0)
        std::printf("all 12 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures;
}
