#pragma once

#include <array>
#include <vector>

#include "omega/exact.hpp"

namespace omega {

/// A generalized hypergeometric series pFq whose parameter set forces
/// termination: at least one upper parameter is a non-positive integer.
struct TerminatingPFQ {
    std::vector<Rat> upper;
    std::vector<Rat> lower;
    Gaussian argument{rat(1)};

    // Smallest |a_i| over non-positive integer upper parameters.
    // Throws if no upper parameter terminates the series.
    long termination_index() const;
};

// Exact finite sum  sum_{k=0..n} prod (a_i)_k / prod (b_j)_k * z^k / k!.
// Throws if a lower parameter hits zero before the termination index.
Gaussian eval_terminating(const TerminatingPFQ& series);

// Convenience for rational-argument series.
Rat eval_terminating_rat(const std::vector<Rat>& upper, const std::vector<Rat>& lower,
                         const Rat& z = rat(1));

// 2F1(-k, b; c; 1) == (c-b)_k / (c)_k
bool chu_vandermonde_check(long k, const Rat& b, const Rat& c);

// 2F1(a, b; c; 1) equals the Gamma-quotient closed form, for non-positive
// integer a. Throws on an unresolvable pole of the closed form.
bool gauss_sum_check(long a_neg, const Rat& b, const Rat& c);

// (p+1)F(q+1) with an upper parameter exceeding a lower one by `shift`
// collapses to a finite combination of pFq values.
bool shift_reduce_check(const TerminatingPFQ& series, long shift);

/// Whipple's six parameters r_0..r_5 with sum zero; alpha and beta index the
/// 3F2 data built from them.
struct WhippleParams {
    std::array<Rat, 6> r;

    Rat alpha(int i, int j, int k) const { return rat(1, 2) + r[i] + r[j] + r[k]; }
    Rat beta(int i, int j) const { return rat(1) + r[i] - r[j]; }
};

// Unique r with alpha_145=a, alpha_245=b, alpha_345=c, beta_40=e, beta_50=f.
WhippleParams whipple_solve(const Rat& a, const Rat& b, const Rat& c, const Rat& e, const Rat& f);

// Normalized Fp(u; v, w) for integer parameter data (prefactor Gammas must be
// at positive integers).
Rat whipple_fp(const WhippleParams& wp, int u, int v, int w);

// Product of Gamma(alpha_xvw) over the ten triples avoiding u, with poles
// replaced by 1/Gamma(1 - alpha_xvw); integer alphas required.
Rat whipple_rp_squared(const WhippleParams& wp, int u);

// Two-term 3F2(1) transformation:
// 3F2(a,b,c;e,f;1) = G(f)G(e+f-a-b-c)/(G(f-a)G(e+f-b-c)) 3F2(a,e-b,e-c;e,e+f-b-c;1)
bool cor335_check(const Rat& a, const Rat& b, const Rat& c, const Rat& e, const Rat& f);

// Fp(0;4,5) = (-1)^(d-n+s) (Rp(5)/Rp(0)) Fp(5;3,4) for the integer family
// a=-s, b=-d-m+n, c=-d, e=1-d+m-s, f=1-d+n-s; requires m >= n >= d+s, s >= 0.
// Verifies the squared relation and the ratio form with the principal root.
bool raynal_check(long m, long n, long d, long s);

// Shared alternating t-sum of the basis-change kernel.
Rat t_sum(long m, long n, long d, long s);

// t-sum == 3F2 form valid for n >= d + s.
bool t1_check(long m, long n, long d, long s);

// t-sum == 3F2 form valid for n <= d + s.
bool t2_check(long m, long n, long d, long s);

// t-sum equals the normalized 3F2 right-hand side; m >= n >= d, 0 <= s <= m.
bool verify_L1(long m, long n, long d, long s);

}  // namespace omega
