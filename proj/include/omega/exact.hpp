#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace omega {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: reduced, denominator > 0

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_nonpositive_integer(const Rat& q) { return is_integer(q) && q <= 0; }

// q must be an integer that fits in a long.
long to_long(const Rat& q);

/// Exact complex number with rational real and imaginary parts.
struct Gaussian {
    Rat re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rat r) : re(std::move(r)), im(0) {}
    Gaussian(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    Gaussian conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Gaussian operator/(const Gaussian& o) const {
        Rat n = o.norm();
        if (n == 0) throw std::domain_error("Gaussian: division by zero");
        Gaussian p = *this * o.conj();
        return {p.re / n, p.im / n};
    }
    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o) { *this = *this * o; return *this; }
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

// i^k, exact
Gaussian i_power(long k);

/// Value of the form coeff * pi^(half_power/2). Products and quotients stay in
/// this form; sums are only defined between values of equal power.
struct SqrtPi {
    Rat coeff;
    long half_power = 0;  // value = coeff * pi^(half_power/2)

    SqrtPi() : coeff(0) {}
    SqrtPi(Rat c, long hp = 0) : coeff(std::move(c)), half_power(hp) {}

    bool is_rational() const { return half_power == 0 || coeff == 0; }

    SqrtPi operator*(const SqrtPi& o) const { return {coeff * o.coeff, half_power + o.half_power}; }
    SqrtPi operator/(const SqrtPi& o) const {
        if (o.coeff == 0) throw std::domain_error("SqrtPi: division by zero");
        return {coeff / o.coeff, half_power - o.half_power};
    }
    SqrtPi operator+(const SqrtPi& o) const {
        if (coeff == 0) return o;
        if (o.coeff == 0) return *this;
        if (half_power != o.half_power)
            throw std::domain_error("SqrtPi: sum of mixed pi powers");
        return {coeff + o.coeff, half_power};
    }
    SqrtPi operator-(const SqrtPi& o) const { return *this + SqrtPi{-o.coeff, o.half_power}; }
    bool operator==(const SqrtPi& o) const {
        if (coeff == 0 && o.coeff == 0) return true;
        return coeff == o.coeff && half_power == o.half_power;
    }

    double to_double() const;
};

/// Gamma at an integer argument: either a factorial value or a pole marker.
/// Consumers of Whipple R-factors branch on the pole explicitly.
struct GammaInt {
    bool pole = false;
    Rat value;  // (a-1)! when a >= 1
};

// Generalized binomial coefficient: a(a-1)...(a-k+1)/k!. Integer upper index
// may be negative; k < 0 yields 0.
Rat binomial(long a, long k);

// Same with rational upper index.
Rat binomial_rat(const Rat& a, long k);

// Rising factorial a(a+1)...(a+k-1); k = 0 gives 1.
Rat pochhammer(const Rat& a, long k);

Rat factorial(long n);

// Gamma(two_a / 2) for two_a >= 1, exact.
SqrtPi gamma_half_int(long two_a);

// Beta(two_a/2, two_b/2) for two_a, two_b >= 1, exact via the Gamma quotient.
SqrtPi beta_half_int(long two_a, long two_b);

// Gamma at an arbitrary integer; non-positive arguments are poles.
GammaInt gamma_int(long a);

// Exact square root of a rational that is a perfect square; throws otherwise.
Rat sqrt_exact(const Rat& q);

std::string to_string(const Rat& q);

}  // namespace omega
