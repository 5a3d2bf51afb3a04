#include "omega/jacobi.hpp"

#include <cmath>

namespace omega {

std::complex<double> JacobiPoly::eval(std::complex<double> x) const {
    std::complex<double> r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + to_double(*it);
    return r;
}

double JacobiPoly::eval(double x) const {
    double r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + to_double(*it);
    return r;
}

Rat JacobiPoly::eval_exact(const Rat& x) const {
    Rat r(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

JacobiPoly jacobi_poly(long k, const Rat& alpha, const Rat& beta) {
    if (k < 0) throw std::domain_error("jacobi_poly: negative degree");
    JacobiPoly p;
    p.degree = k;
    p.alpha = alpha;
    p.beta = beta;
    p.coeffs.assign(k + 1, rat(0));
    // term j of the 2F1 carries the combined coefficient
    //   c_j = (-k)_j (k+a+b+1)_j (a+j+1)_{k-j} / (k! j!)
    // in which the prefactor binomial and the (a+1)_j denominator have been
    // merged, so negative integer alpha never divides by zero.
    for (long j = 0; j <= k; ++j) {
        Rat c = pochhammer(rat(-k), j) * pochhammer(alpha + beta + k + 1, j) *
                pochhammer(alpha + j + 1, k - j) / (factorial(k) * factorial(j));
        if (c == 0) continue;
        // expand ((1-x)/2)^j
        Int two_j;
        mpz_ui_pow_ui(two_j.get_mpz_t(), 2, static_cast<unsigned long>(j));
        for (long t = 0; t <= j; ++t) {
            Rat mono = c * binomial(j, t) / Rat(two_j);
            if (t % 2 != 0) mono = -mono;
            p.coeffs[t] += mono;
        }
    }
    return p;
}

SqrtPi orthogonality_constant(const Rat& alpha, const Rat& beta, long k) {
    if (!(alpha > -1 && beta > -1))
        throw std::domain_error("orthogonality_constant: parameters must exceed -1");
    Rat ta = alpha * 2, tb = beta * 2;
    if (!is_integer(ta) || !is_integer(tb))
        throw std::domain_error("orthogonality_constant: parameters must be half-integers");
    bool a_int = is_integer(alpha), b_int = is_integer(beta);
    if (a_int != b_int)
        throw std::domain_error(
            "orthogonality_constant: mixed integer/half-integer parameters are not exactly "
            "representable (2^(a+b+1) is irrational)");
    long sum2 = to_long(ta) + to_long(tb);  // 2(a+b), even here
    long ab1 = sum2 / 2 + 1;                // a+b+1, integer
    Rat two_pow;
    if (ab1 >= 0) {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(ab1));
        two_pow = Rat(t);
    } else {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(-ab1));
        two_pow = rat(1) / Rat(t);
    }
    SqrtPi num = gamma_half_int(to_long(ta) + 2 * k + 2);   // Gamma(k + a + 1)
    SqrtPi num2 = gamma_half_int(to_long(tb) + 2 * k + 2);  // Gamma(k + b + 1)
    SqrtPi den = gamma_half_int(sum2 + 2 * k + 2);  // Gamma(k + a + b + 1)
    Rat scalar = two_pow / (factorial(k) * (2 * k + rat(sum2, 2) + 1));
    return SqrtPi{scalar} * num * num2 / den;
}

bool symmetry_check(long k, const Rat& alpha, const Rat& beta) {
    JacobiPoly a = jacobi_poly(k, alpha, beta);
    JacobiPoly b = jacobi_poly(k, beta, alpha);
    for (long t = 0; t <= k; ++t) {
        Rat rhs = b.coeffs[t];
        if ((k + t) % 2 != 0) rhs = -rhs;  // (-1)^k * (-1)^t from x -> -x
        if (a.coeffs[t] != rhs) return false;
    }
    return true;
}

bool bound_check(long k, const Rat& alpha, const Rat& beta, std::span<const double> samples) {
    if (!(alpha >= beta && beta >= rat(-1, 2)))
        throw std::domain_error("bound_check: requires alpha >= beta >= -1/2");
    JacobiPoly p = jacobi_poly(k, alpha, beta);
    double bound = to_double(pochhammer(alpha + 1, k) / factorial(k));
    double slack = 1e-12 * std::max(1.0, bound);
    for (double x : samples) {
        if (x < -1.0 || x > 1.0) throw std::domain_error("bound_check: sample outside [-1,1]");
        if (std::abs(p.eval(x)) > bound + slack) return false;
    }
    return true;
}

}  // namespace omega
