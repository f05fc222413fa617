#pragma once

#include "derivkit/numbers.hpp"

namespace derivkit {

// n!
Int factorial(unsigned n);

// n!! with the empty-product conventions (-1)!! = 0!! = 1.
// Throws std::invalid_argument for n < -1.
Int double_factorial(long n);

// C(n, k); zero when k < 0 or k > n.
Int binomial(unsigned n, long k);

// Lah number L(n, k) = C(n-1, k-1) * n! / k!, the number of ways to partition
// an n-set into k nonempty linearly ordered lists. Requires 1 <= k <= n.
Int lah(unsigned n, unsigned k);

// Stirling number of the second kind via the alternating sum
// S(n, k) = (1/k!) * sum_{l=0}^{k} (-1)^{k-l} C(k, l) l^n.
// The division by k! is deferred to the end and asserted exact.
// Requires 1 <= k <= n.
Int stirling2(unsigned n, unsigned k);

// Same numbers through the triangle S(n,k) = k*S(n-1,k) + S(n-1,k-1);
// used as a cross-check route against the explicit sum.
Int stirling2_recurrence(unsigned n, unsigned k);

// Coefficient families for the derivative expansions of tan and cot.
// Both vanish whenever p - q is even; requires p > q >= 0.
Int alpha_pq(unsigned p, unsigned q);
Int beta_pq(unsigned p, unsigned q);

}  // namespace derivkit
