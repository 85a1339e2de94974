#pragma once

#include <vector>

#include "skeletal/rational.hpp"

namespace skeletal {

// Covering exponent for the k-skeleton problem in dimension n:
//   beta(n, k) = 1 - (n-k) / (2n^2),  0 <= k < n.
Rational beta_exponent(int n, int k);

// Exponent for the l-corner condition: nl(n, l) = l(2n-1) / (2n^2), 1 <= l <= n.
Rational nl_exponent(int n, int l);

// Rate function R(alpha) = (2n^2 - (2n-1)(n-k)) / (2n^2 (k + n(1-alpha))) and
//   f(alpha) = R(alpha)*k + (2n-1)(n-k) / (2n^2)
//            = 1 - R(alpha)*n*(1-alpha)      (same rational, two readings).
// Domain: 0 <= alpha <= 1 with k + n(1-alpha) > 0; the only excluded point is
// alpha = 1 at k = 0, where the rate denominator vanishes.
Rational rate_R(int n, int k, const Rational& alpha);
Rational f_alpha(int n, int k, const Rational& alpha);

// Iterate alpha_{m+1} = f(alpha_m) from alpha_0 = 0. The trace is monotone
// nondecreasing and bounded by beta(n, k), its unique fixpoint in [0, 1).
struct ExponentReport {
    int n = 0, k = 0;
    Rational beta;
    std::vector<Rational> trace;  // f^0(0), f^1(0), ...
    bool converged = false;
    int converged_at = -1;  // first m with |f^m(0) - beta| < tol
};

ExponentReport iterate_f(int n, int k, const Rational& tol = Rational(1, 1000000000),
                         int max_steps = 5000);

}  // namespace skeletal
