#pragma once

#include "intspace/rational.hpp"

namespace intspace::specfun {

// C(m, k), exact. Zero when k < 0 or k > m; m must be nonnegative.
Rational binomial(long m, long k);

// B(p, q) = (p-1)!(q-1)!/(p+q-1)! for integers p, q >= 1.
Rational beta_int(long p, long q);

// psi(j+m) - psi(j) = sum_{t=0}^{m-1} 1/(j+t), exact; j >= 1, m >= 0.
Rational digamma_forward_difference(long j, long m);

struct Hyp2f1Params {
    long a;
    long b;
    long c;
};

// Gauss 2F1 at z <= 0 for positive integer parameters. The argument is
// mapped to t = z/(z-1) in [0,1) (pivoting on min(a,b)); the mapped series
// is summed directly for moderate t and switched to the (1-t)-expansion of
// the integer-difference case near t = 1. Truncation stops once the next
// term drops below rel_tol of the partial sum; exceeding max_terms raises
// convergence_error. z = 0 returns exactly 1.
double hyp2f1(const Hyp2f1Params& p, double z, double rel_tol = 1e-13,
              long max_terms = 1000000);

// The mapped-series factor M = F(A, B; C; t) for t in [0,1), taking the
// exact complement one_minus_t and its log so callers that know them (the
// logistic density works with t = 1 - e^{-v}) never lose precision forming
// 1-t. hyp2f1(a,b,c,z) equals (1-z)^{-min(a,b)} * M with A = min(a,b),
// B = c - max(a,b), C = c.
double hyp2f1_mapped(long A, long B, long C, double t, double one_minus_t,
                     double log_one_minus_t, double rel_tol, long max_terms);

// Precision for rational-to-real conversions: INTSPACE_PRECISION_BITS when
// set (2..16384), otherwise 64.
unsigned precision_bits_from_env();

}  // namespace intspace::specfun
