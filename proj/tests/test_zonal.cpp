#include <doctest.h>

#include "helpers.hpp"
#include "omega/quadrature.hpp"
#include "omega/sampling.hpp"
#include "omega/zonal.hpp"

using namespace omega;
using omega::test::cdist;

TEST_CASE("sum route basics") {
    Sampler smp(201);
    for (int i = 0; i < 10; ++i) {
        OmegaPoint p1 = smp.omega_point_in_disk(), p2 = smp.omega_point_in_disk();
        CHECK(cdist(zonal_sum(0, p1, p2), {1.0, 0.0}) == 0.0);
    }
    for (long m = 0; m <= 6; ++m) {
        OmegaPoint p = smp.omega_point_in_disk();
        CHECK(cdist(zonal_sum(m, p, p), {2.0 * m + 1.0, 0.0}) < 1e-11 * (2 * m + 1));
    }
}

TEST_CASE("sum and pullback routes agree") {
    Sampler smp(203);
    for (long m = 0; m <= 8; ++m) {
        double worst = 0.0;
        for (int i = 0; i < 40; ++i) {
            OmegaPoint p1 = smp.omega_point_in_disk(0.35, 0.4);
            OmegaPoint p2 = smp.omega_point_in_disk(0.35, 0.4);
            worst = std::max(worst, cdist(zonal_sum(m, p1, p2), zonal_pullback(m, p1, p2)));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("pullback route branches") {
    Sampler smp(207);
    // base point (0,0): T_{0,0} negates, and P_0 sees only the product
    for (long m = 0; m <= 5; ++m) {
        OmegaPoint p = smp.omega_point_in_disk();
        OmegaPoint origin{Complex{0.0, 0.0}, Complex{0.0, 0.0}};
        CHECK(cdist(zonal_pullback(m, p, origin),
                    (2.0 * m + 1.0) * pfm_eval({m, 0}, p)) < 1e-12 * (2 * m + 1));
        CHECK(cdist(zonal_pullback(m, p, p), {2.0 * m + 1.0, 0.0}) < 1e-10 * (2 * m + 1));
    }
    // both branches agree for nonzero finite base points
    for (int i = 0; i < 30; ++i) {
        OmegaPoint p1 = smp.omega_point_in_disk();
        OmegaPoint p2 = smp.omega_point_in_disk();
        if (p2.z.is_zero(1e-3) || p2.w.is_zero(1e-3)) continue;
        long m = i % 5;
        Complex direct = zonal_pullback(m, p1, p2);
        MoebiusMap Tt = t_tilde(p2.z, p2.w);
        Complex tilde = (2.0 * m + 1.0) * pfm_eval({m, 0}, apply(Tt, p1));
        CHECK(cdist(direct, tilde) < 1e-12 * (1.0 + std::abs(direct)));
    }
    // infinite base coordinates take the tilde branch
    OmegaPoint at_inf{ExtendedComplex::infinity(), ExtendedComplex{Complex{0.5, 0.0}}};
    CHECK(std::abs(zonal_pullback(2, at_inf, at_inf) - 5.0) < 1e-12);
}

TEST_CASE("invariance under the group") {
    Sampler smp(211);
    std::vector<std::pair<OmegaPoint, OmegaPoint>> pairs;
    for (int i = 0; i < 20; ++i)
        pairs.emplace_back(smp.omega_point_in_disk(0.5, 0.3), smp.omega_point_in_disk(0.5, 0.3));
    CHECK(zonal_invariance_residual(3, identity_map(), pairs) == 0.0);
    CHECK(zonal_invariance_residual(4, rho(std::polar(1.0, 1.1)), pairs) < 1e-10);
    for (int i = 0; i < 10; ++i)
        CHECK(zonal_invariance_residual(3, smp.moebius_map(), pairs) < 1e-9);
}

TEST_CASE("stabilizer invariance at a fixed point") {
    auto pts = omega::test::sample_points(25, 213, 0.5);
    OmegaPoint uv{Complex{0.4, 0.0}, Complex{0.1, 0.0}};
    CHECK(fixed_point_invariance(3, uv, Complex{1.0, 0.0}, pts) < 1e-12);
    OmegaPoint origin{Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    CHECK(fixed_point_invariance(4, origin, Complex{0.0, 1.0}, pts) < 1e-10);
    CHECK(fixed_point_invariance(3, uv, std::polar(1.0, 2.0), pts) < 1e-9);
    CHECK(fixed_point_invariance(2, uv, Complex{1.7, 0.4}, pts) < 1e-9);
}

TEST_CASE("reproducing property") {
    SphereQuadrature q = SphereQuadrature::make(48, 128);
    OmegaPoint origin{Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    // m = 0: the identity reduces to the total mass
    CHECK(reproducing_residual(0, [](const OmegaPoint&) { return Complex{1.0, 0.0}; }, origin, q) <
          1e-13);
    for (long m = 1; m <= 3; ++m)
        CHECK(reproducing_residual(m, pfm_evaluator({m, 0}), origin, q) < 1e-9);
    // a random combination inside the eigenspace
    Sampler smp(217);
    Complex c1{smp.uniform(-1, 1), smp.uniform(-1, 1)};
    Complex c2{smp.uniform(-1, 1), smp.uniform(-1, 1)};
    Complex c3{smp.uniform(-1, 1), smp.uniform(-1, 1)};
    Evaluator combo = [&](const OmegaPoint& p) {
        return c1 * pfm_eval({2, -2}, p) + c2 * pfm_eval({2, 1}, p) + c3 * pfm_eval({2, 0}, p);
    };
    OmegaPoint pt{Complex{0.3, 0.1}, Complex{-0.2, 0.25}};
    CHECK(reproducing_residual(2, combo, pt, q) < 1e-8);
}

TEST_CASE("conjugation identity on the rotated diagonal") {
    Sampler smp(219);
    for (int i = 0; i < 40; ++i) {
        Complex u = smp.disk(2.0);
        OmegaPoint p = rotated_diagonal(ExtendedComplex{u});
        long m = i % 5, j = (i % (2 * 5 + 1)) - 5;
        if (std::labs(j) > m) continue;
        Complex lhs = pfm_eval({m, -j}, p);
        Complex rhs = std::conj(pfm_eval({m, j}, p));
        if (j % 2 != 0) rhs = -rhs;
        CHECK(cdist(lhs, rhs) < 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("zonal symmetry") {
    Sampler smp(223);
    for (int i = 0; i < 30; ++i) {
        OmegaPoint p1 = smp.omega_point_in_disk(), p2 = smp.omega_point_in_disk();
        long m = i % 6;
        Complex a = zonal_sum(m, p1, p2), b = zonal_sum(m, p2, p1);
        CHECK(cdist(a, b) < 1e-11 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("sphere restriction") {
    CHECK(zonal_sphere(3, ExtendedComplex{Complex{0.4, 0.2}}, ExtendedComplex{Complex{0.4, 0.2}}) ==
          doctest::Approx(7.0).epsilon(1e-12));
    // infinity is a legitimate sphere point
    CHECK(zonal_sphere(2, ExtendedComplex::infinity(), ExtendedComplex::infinity()) ==
          doctest::Approx(5.0).epsilon(1e-12));
    Sampler smp(227);
    for (long m = 0; m <= 8; ++m) {
        for (int i = 0; i < 30; ++i) {
            ExtendedComplex z{smp.disk(2.5)}, u{smp.disk(2.5)};
            double v = zonal_sphere(m, z, u);
            CHECK(std::abs(v) <= 2.0 * m + 1.0 + 1e-9);
            Complex via_sum = zonal_sum(m, rotated_diagonal(z), rotated_diagonal(u));
            CHECK(std::abs(via_sum.imag()) < 1e-9 * (2 * m + 1));
            CHECK(std::abs(v - via_sum.real()) < 1e-9 * (2 * m + 1));
        }
    }
    // rigid motions of the sphere leave the kernel invariant
    for (int i = 0; i < 20; ++i) {
        Complex a = smp.disk(1.0);
        // psi(zeta) = (a - zeta)/(1 + conj(a) zeta) is a rigid motion generator
        auto motion = [a](ExtendedComplex zt) -> ExtendedComplex {
            if (zt.inf) {
                if (a == Complex{0.0, 0.0}) return ExtendedComplex::infinity();
                return ExtendedComplex{-1.0 / std::conj(a)};
            }
            Complex den = 1.0 + std::conj(a) * zt.v;
            if (den == Complex{0.0, 0.0}) return ExtendedComplex::infinity();
            return ExtendedComplex{(a - zt.v) / den};
        };
        ExtendedComplex z{smp.disk(1.5)}, u{smp.disk(1.5)};
        long m = i % 5;
        CHECK(std::abs(zonal_sphere(m, z, u) - zonal_sphere(m, motion(z), motion(u))) <
              1e-9 * (2 * m + 1));
    }
}

TEST_CASE("disk restriction") {
    CHECK(zonal_disk(0, Complex{0.3, 0.1}, Complex{-0.5, 0.2}) == doctest::Approx(1.0));
    Sampler smp(229);
    for (long m = 0; m <= 5; ++m) {
        Complex z = smp.disk(0.8);
        CHECK(zonal_disk(m, z, z) == doctest::Approx(2.0 * m + 1.0).epsilon(1e-10));
    }
    // invariance under disk automorphisms applied to both arguments
    Complex a{0.3, -0.25};
    auto blaschke = [a](Complex z) { return (a - z) / (1.0 - std::conj(a) * z); };
    for (int i = 0; i < 20; ++i) {
        Complex z = smp.disk(0.7), u = smp.disk(0.7);
        long m = i % 5;
        CHECK(std::abs(zonal_disk(m, z, u) - zonal_disk(m, blaschke(z), blaschke(u))) <
              1e-9 * (2 * m + 1));
    }
    CHECK_THROWS_AS(zonal_disk(2, Complex{1.2, 0.0}, Complex{0.0, 0.0}), std::domain_error);
}

TEST_CASE("addition formula through restricted orthonormal modes") {
    // e_j = Y_j^{-m} o rotated diagonal reproduces the sphere kernel
    Sampler smp(233);
    for (int i = 0; i < 20; ++i) {
        long m = i % 4;
        ExtendedComplex z{smp.disk(1.2)}, u{smp.disk(1.2)};
        Complex acc{0.0, 0.0};
        for (long j = -m; j <= m; ++j)
            acc += std::conj(y_eval({m, j}, rotated_diagonal(u))) * y_eval({m, j}, rotated_diagonal(z));
        CHECK(std::abs(acc.imag()) < 1e-10 * (2 * m + 1));
        CHECK(std::abs(acc.real() - zonal_sphere(m, z, u)) < 1e-9 * (2 * m + 1));
    }
}
