#include "omega/exact.hpp"

#include <cmath>

namespace omega {

long to_long(const Rat& q) {
    if (!is_integer(q)) throw std::domain_error("to_long: not an integer: " + to_string(q));
    if (!q.get_num().fits_slong_p()) throw std::domain_error("to_long: out of range");
    return q.get_num().get_si();
}

Gaussian i_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {rat(1), rat(0)};
        case 1: return {rat(0), rat(1)};
        case 2: return {rat(-1), rat(0)};
        default: return {rat(0), rat(-1)};
    }
}

double SqrtPi::to_double() const {
    return omega::to_double(coeff) * std::pow(M_PI, 0.5 * static_cast<double>(half_power));
}

Rat binomial(long a, long k) {
    if (k < 0) return rat(0);
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= Int(a - i);
    Rat q(num, factorial(k).get_num());
    q.canonicalize();
    return q;
}

Rat binomial_rat(const Rat& a, long k) {
    if (k < 0) return rat(0);
    Rat num(1);
    for (long i = 0; i < k; ++i) num *= (a - i);
    return num / factorial(k);
}

Rat pochhammer(const Rat& a, long k) {
    if (k < 0) throw std::domain_error("pochhammer: negative index");
    Rat r(1);
    for (long i = 0; i < k; ++i) r *= (a + i);
    return r;
}

Rat factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

SqrtPi gamma_half_int(long two_a) {
    if (two_a < 1) throw std::domain_error("gamma_half_int: argument must be positive");
    if (two_a % 2 == 0) return {factorial(two_a / 2 - 1), 0};
    // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
    long k = (two_a - 1) / 2;
    Int four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    Rat c = factorial(2 * k) / (Rat(four_k) * factorial(k));
    return {c, 1};
}

SqrtPi beta_half_int(long two_a, long two_b) {
    if (two_a < 1 || two_b < 1) throw std::domain_error("beta_half_int: arguments must be positive");
    return gamma_half_int(two_a) * gamma_half_int(two_b) / gamma_half_int(two_a + two_b);
}

GammaInt gamma_int(long a) {
    if (a <= 0) return {true, rat(0)};
    return {false, factorial(a - 1)};
}

Rat sqrt_exact(const Rat& q) {
    if (q < 0) throw std::domain_error("sqrt_exact: negative");
    Int num = q.get_num(), den = q.get_den();
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn != num || rd * rd != den)
        throw std::domain_error("sqrt_exact: not a perfect square: " + to_string(q));
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace omega
