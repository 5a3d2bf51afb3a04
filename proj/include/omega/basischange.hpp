#pragma once

#include <vector>

#include "omega/exact.hpp"
#include "omega/omega_point.hpp"
#include "omega/pfm.hpp"

namespace omega {

/// One row of a basis change: exact coefficients attached to target indices.
/// For pfm_in_f the targets are f_{p,q}; for f_in_pfm they are PFM (m, n).
struct BasisChangeTerm {
    long i = 0, j = 0;
    Rat coeff;
};

struct BasisChangeRow {
    long src_i = 0, src_j = 0;
    std::vector<BasisChangeTerm> terms;
};

// P_n^{-m} as a finite combination of the f_{p,q}; empty row when |n| > m.
BasisChangeRow pfm_in_f(long m, long n);

// f_{p,q} as a combination of PFM. Stated for 0 <= p <= q; other orderings go
// through the symmetry f_{p,q}(z,w) = f_{q,p}(w,z), which flips the sign of
// the target homogeneity index.
BasisChangeRow f_in_pfm(long p, long q);

// a_{s,m,n} = (-1)^s C(m,s) C(2m-s,n)^{-1} (2m-2s+1)/(2m-s+1)
Rat a_coefficient(long s, long m, long n);

// Value of the combinatorial double sum for one (m, n, d); equals delta_{n,d}.
Rat cid_entry(long m, long n, long d);

// Exhaustive exact check of the identity for all 0 <= d <= n <= m.
bool cid_check(long m);

// |a_{s,m,n}| <= C(m-s, n-s) <= handled bound and the exact partition
// sum_s C(m-s,n-s) |a_{s,m,n}| = 1, for all 0 <= s <= n <= m.
bool a_bound_check(long m);

// f_in_pfm after pfm_in_f is the identity on modes of degree <= m_max.
bool roundtrip_check(long m_max);

// Old-basis Schauder coefficient b_{p,q} of F by a double contour integral
// over circles of radii r1, r2 (trapezoid rule, `nodes` points per circle).
Complex b_coeff_numeric(const Evaluator& F, long p, long q, double r1 = 1.0, double r2 = 1.0,
                        int nodes = 512);

}  // namespace omega
