#include <doctest.h>

#include <vector>

#include "omega/jacobi.hpp"

using namespace omega;

namespace {

// exact polynomial product, independent of the module under test
std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size() + b.size() - 1, rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// integral over [-1,1] of (1-x)^alpha (1+x)^beta p(x) q(x), exact, for
// non-negative integer alpha, beta
Rat weighted_integral(const JacobiPoly& p, const JacobiPoly& q, long alpha, long beta) {
    std::vector<Rat> acc = poly_mul(p.coeffs, q.coeffs);
    for (long i = 0; i < alpha; ++i) acc = poly_mul(acc, {rat(1), rat(-1)});
    for (long i = 0; i < beta; ++i) acc = poly_mul(acc, {rat(1), rat(1)});
    Rat total(0);
    for (size_t t = 0; t < acc.size(); ++t)
        if (t % 2 == 0) total += acc[t] * rat(2, static_cast<long>(t) + 1);
    return total;
}

}  // namespace

TEST_CASE("low-degree expansions") {
    JacobiPoly p0 = jacobi_poly(0, rat(3), rat(-1, 2));
    CHECK(p0.coeffs == std::vector<Rat>{rat(1)});
    for (long k = 1; k <= 10; ++k) {
        JacobiPoly p = jacobi_poly(k, rat(2, 3), rat(-1, 4));
        CHECK(p.coeffs.size() == static_cast<size_t>(k + 1));
        CHECK(p.coeffs.back() != rat(0));  // generic parameters keep full degree
    }
    JacobiPoly p1 = jacobi_poly(1, rat(0), rat(0));
    CHECK(p1.coeffs == std::vector<Rat>{rat(0), rat(1)});  // x
    JacobiPoly p2 = jacobi_poly(2, rat(1), rat(1));
    CHECK(p2.coeffs == std::vector<Rat>{rat(-3, 4), rat(0), rat(15, 4)});  // (15x^2-3)/4
}

TEST_CASE("orthogonality constants") {
    SqrtPi a = orthogonality_constant(rat(0), rat(0), 1);
    REQUIRE(a.is_rational());
    CHECK(a.coeff == rat(2, 3));
    SqrtPi b = orthogonality_constant(rat(1), rat(1), 0);
    REQUIRE(b.is_rational());
    CHECK(b.coeff == rat(4, 3));
    // half-integer pair: A_{1/2,1/2,0} = pi/2
    SqrtPi c = orthogonality_constant(rat(1, 2), rat(1, 2), 0);
    CHECK(c == SqrtPi{rat(1, 2), 2});
    CHECK_THROWS_AS(orthogonality_constant(rat(1, 2), rat(1), 0), std::domain_error);
    CHECK_THROWS_AS(orthogonality_constant(rat(-3, 2), rat(0), 0), std::domain_error);
}

TEST_CASE("weighted orthogonality against exact integration") {
    for (long alpha = 0; alpha <= 2; ++alpha) {
        for (long beta = 0; beta <= 2; ++beta) {
            std::vector<JacobiPoly> fam;
            for (long k = 0; k <= 12; ++k) fam.push_back(jacobi_poly(k, rat(alpha), rat(beta)));
            for (long k = 0; k <= 12; ++k) {
                for (long l = k; l <= 12; ++l) {
                    Rat integral = weighted_integral(fam[k], fam[l], alpha, beta);
                    if (k != l) {
                        CHECK(integral == rat(0));
                    } else {
                        SqrtPi expect = orthogonality_constant(rat(alpha), rat(beta), k);
                        REQUIRE(expect.is_rational());
                        CHECK(integral == expect.coeff);
                    }
                }
            }
        }
    }
    // self-integral of P_1^(0,0): 2/3
    JacobiPoly p1 = jacobi_poly(1, rat(0), rat(0));
    CHECK(weighted_integral(p1, p1, 0, 0) == rat(2, 3));
}

TEST_CASE("parameter symmetry") {
    CHECK(symmetry_check(0, rat(2), rat(5)));
    CHECK(symmetry_check(3, rat(2), rat(1)));
    CHECK(symmetry_check(4, rat(2), rat(2)));
    for (long k = 0; k <= 8; ++k) CHECK(symmetry_check(k, rat(1, 2), rat(5, 2)));
}

TEST_CASE("parity for equal parameters") {
    for (long k = 0; k <= 9; ++k) {
        JacobiPoly p = jacobi_poly(k, rat(2), rat(2));
        for (long t = 0; t <= k; ++t)
            if ((k - t) % 2 != 0) CHECK(p.coeffs[t] == rat(0));
    }
}

TEST_CASE("negative integer first parameter via index lowering") {
    // C(k,l) P_k^(-l,b) = C(k+b,l) ((x-1)/2)^l P_{k-l}^(l,b)
    for (long k = 1; k <= 7; ++k) {
        for (long l = 1; l <= k; ++l) {
            for (long b = 0; b <= 3; ++b) {
                JacobiPoly lhs_poly = jacobi_poly(k, rat(-l), rat(b));
                std::vector<Rat> lhs = lhs_poly.coeffs;
                for (Rat& cf : lhs) cf *= binomial(k, l);
                std::vector<Rat> shift{rat(-1, 2), rat(1, 2)};  // (x-1)/2
                std::vector<Rat> rhs = jacobi_poly(k - l, rat(l), rat(b)).coeffs;
                for (long i = 0; i < l; ++i) rhs = poly_mul(rhs, shift);
                for (Rat& cf : rhs) cf *= binomial(k + b, l);
                rhs.resize(k + 1, rat(0));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("uniform bound") {
    std::vector<double> grid;
    for (int i = 0; i < 1000; ++i) grid.push_back(-1.0 + 2.0 * i / 999.0);
    for (long k = 0; k <= 20; ++k) CHECK(bound_check(k, rat(0), rat(0), grid));
    // endpoint attains the bound
    JacobiPoly p = jacobi_poly(6, rat(2), rat(1));
    CHECK(p.eval(1.0) == doctest::Approx(to_double(pochhammer(rat(3), 6) / factorial(6))));
    CHECK(bound_check(5, rat(2), rat(1), grid));
    CHECK_THROWS_AS(bound_check(3, rat(0), rat(1), grid), std::domain_error);
}
