#pragma once

#include "derivkit/numbers.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace derivkit {

// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) as an exact multivariate
// polynomial: each key is an exponent vector (l_1, ..., l_{n-k+1}) satisfying
// sum i*l_i = n and sum l_i = k; the value is the integer coefficient
// n! / (prod l_i! * prod (i!)^{l_i}).
struct BellPoly {
  unsigned n = 0;
  unsigned k = 0;
  std::map<std::vector<unsigned>, Int, std::greater<std::vector<unsigned>>> terms;
};

// Enumerates all partition profiles of n into k parts by bounded depth-first
// search. Requires 1 <= k <= n.
BellPoly bell_general(unsigned n, unsigned k);

// Substitutes args into the polynomial; args must supply at least n-k+1 values.
Rational bell_evaluate(const BellPoly& p, std::span<const Rational> args);

// Both sides of the dilation identity
// B_{n,k}(a b x_1, a b^2 x_2, ...) = a^k b^n B_{n,k}(x_1, x_2, ...)
// evaluated at the given argument vector; they agree for every input.
struct ScaleWitness {
  Rational scaled_arguments_eval;   // B_{n,k}(a b x_1, a b^2 x_2, ...)
  Rational scaled_original_eval;    // a^k b^n B_{n,k}(x_1, ..., x_{n-k+1})
};
ScaleWitness bell_scale(const BellPoly& p, const Rational& a, const Rational& b,
                        std::span<const Rational> args);

// c * x^p; the closed form of B_{n,k}(x, 1, 0, ..., 0).
struct UnivariateMonomialForm {
  Rational coefficient;
  unsigned x_power = 0;
  bool is_zero() const { return coefficient == 0; }
};

// Closed form of B_{n,k}(x, 1, 0, ..., 0): the zero monomial when 2k - n < 0
// (or 2k = n with n odd, which parity already rules out), and
// a_{n+1, 2k-n} / (2k-1)!! * x^{2k-n} otherwise, with a drawn from the
// recurrence-built coefficient table. Requires 1 <= k <= n.
UnivariateMonomialForm bell_special(unsigned n, unsigned k);

// B_{n,k}(1, ..., 1), which equals the Stirling number S(n, k).
Int bell_ones(unsigned n, unsigned k);

// "4*x1*x3 + 3*x2^2"
std::string to_string(const BellPoly& p);

}  // namespace derivkit
