#pragma once

#include <complex>
#include <span>
#include <vector>

#include "omega/exact.hpp"

namespace omega {

/// Jacobi polynomial in the monomial basis with exact coefficients.
struct JacobiPoly {
    long degree = 0;
    Rat alpha, beta;
    std::vector<Rat> coeffs;  // coeffs[t] multiplies x^t, size degree+1

    std::complex<double> eval(std::complex<double> x) const;
    double eval(double x) const;
    Rat eval_exact(const Rat& x) const;
};

// Expansion of the terminating 2F1 definition. Negative integer alpha is
// admitted through the joint cancellation of the binomial prefactor with the
// vanishing lower-parameter Pochhammers.
JacobiPoly jacobi_poly(long k, const Rat& alpha, const Rat& beta);

// A_{alpha,beta,k} = 2^(a+b+1) G(k+a+1) G(k+b+1) / (k! (2k+a+b+1) G(k+a+b+1)).
// alpha and beta must both be integers or both half-integers, each > -1.
SqrtPi orthogonality_constant(const Rat& alpha, const Rat& beta, long k);

// P_k^(a,b)(x) == (-1)^k P_k^(b,a)(-x), compared coefficient-wise.
bool symmetry_check(long k, const Rat& alpha, const Rat& beta);

// |P_k^(a,b)(x)| <= (a+1)_k / k! for a >= b >= -1/2 at every sample in [-1,1].
bool bound_check(long k, const Rat& alpha, const Rat& beta, std::span<const double> samples);

}  // namespace omega
