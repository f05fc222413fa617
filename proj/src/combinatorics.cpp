#include "derivkit/combinatorics.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace derivkit {

Int factorial(unsigned n) {
  Int result{1};
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Int double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
  Int result{1};
  for (long i = n; i >= 2; i -= 2) result *= i;
  return result;
}

Int binomial(unsigned n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  unsigned kk = static_cast<unsigned>(k);
  if (kk > n - kk) kk = n - kk;
  Int result{1};
  for (unsigned i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact at every step: result is C(n-kk+i, i)
  }
  return result;
}

Int lah(unsigned n, unsigned k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("lah: need 1 <= k <= n");
  return binomial(n - 1, static_cast<long>(k) - 1) * factorial(n) / factorial(k);
}

Int stirling2(unsigned n, unsigned k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("stirling2: need 1 <= k <= n");
  Int sum{0};
  for (unsigned l = 0; l <= k; ++l) {
    Int term = binomial(k, static_cast<long>(l)) * ipow(Int(l), n);
    if ((k - l) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  const Int kfact = factorial(k);
  assert(sum % kfact == 0 && sum >= 0);
  return sum / kfact;
}

Int stirling2_recurrence(unsigned n, unsigned k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("stirling2: need 1 <= k <= n");
  std::vector<Int> row(k + 1, Int(0));
  row[0] = 1;  // S(0,0)
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

namespace {

// Shared alternating core of alpha/beta:
// sum_{l=0}^{(p-q-1)/2} (-1)^l C(p+1, l) ((p-q-1)/2 - l + 1)^p.
Int tan_cot_sum(unsigned p, unsigned q) {
  const unsigned half = (p - q - 1) / 2;
  Int sum{0};
  for (unsigned l = 0; l <= half; ++l) {
    Int term = binomial(p + 1, static_cast<long>(l)) * ipow(Int(half - l + 1), p);
    if (l % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace

Int alpha_pq(unsigned p, unsigned q) {
  if (p <= q) throw std::invalid_argument("alpha_pq: need p > q >= 0");
  if ((p - q) % 2 == 0) return 0;  // parity gate [1 - (-1)^{p-q}]
  // With p - q odd, q - (1 + (-1)^p)/2 is even, so the sign exponent is integral.
  const unsigned p_even_bit = (p % 2 == 0) ? 1u : 0u;
  const unsigned sign_exp = (q - p_even_bit) / 2;
  const Int sum = Int(2) * tan_cot_sum(p, q);
  return (sign_exp % 2 == 0) ? sum : -sum;
}

Int beta_pq(unsigned p, unsigned q) {
  if (p <= q) throw std::invalid_argument("beta_pq: need p > q >= 0");
  if ((p - q) % 2 == 0) return 0;
  const unsigned sign_exp = (p % 2 == 0) ? 0u : 1u;  // (1 - (-1)^p)/2
  const Int sum = Int(2) * tan_cot_sum(p, q);
  return (sign_exp % 2 == 0) ? sum : -sum;
}

}  // namespace derivkit
