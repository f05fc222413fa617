#pragma once

#include "derivkit/expr.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace derivkit {

// Structured nth-derivative expressions for the supported function families.
// Order 0 returns the undifferentiated function's expression. All builders
// are pure; coefficient tables are constructed locally per call.

// d^n/dx^n of sin x or cos x: the same function shifted by n quarter-turns.
ClosedFormExpr sincos_nth(bool is_sin, unsigned n);

// d^n/dx^n of tan x (resp. cot x): a trig polynomial in multiples of x over
// the prefactor cos^{-(n+1)} x (resp. sin^{-(n+1)} x), with alpha/beta
// coefficients. The zero-frequency term carries weight 1/2.
ClosedFormExpr tan_nth(unsigned n);
ClosedFormExpr cot_nth(unsigned n);

// d^n/dt^n of e^{sign/t}: (-1)^n e^{sign/t} t^{-2n} sum_k (sign)^{n-k} L(n,n-k) t^k.
ClosedFormExpr exp_recip_nth(int sign, unsigned n);

// d^n/dx^n of arcsin x from the parity-split coefficient sums.
ClosedFormExpr arcsin_nth(unsigned n);
// The same expression built through the single unified index formula;
// produces term-for-term identical output.
ClosedFormExpr arcsin_nth_unified(unsigned n);
// d^n/dx^n of arccos x = -(d^n/dx^n arcsin x).
ClosedFormExpr arccos_nth(unsigned n);
// d^n/dx^n of (1-x^2)^{-1/2}; identical to arcsin_nth(n+1).
ClosedFormExpr inv_sqrt_one_minus_sq_nth(unsigned n);

// d^n/dx^n of arctan x.
ClosedFormExpr arctan_nth(unsigned n);

// d^n/dx^n of e^{sign x^2}.
ClosedFormExpr exp_sq_nth(int sign, unsigned n);

// d^n/dx^n of sin(x^2) or cos(x^2): a pair of polynomials against
// sin(x^2) and cos(x^2).
ClosedFormExpr trig_sq_nth(bool is_sin, unsigned n);

// d^n/dx^n of ln((1+x)/(1-x)), coefficient-sum form over (1-x^2) powers.
ClosedFormExpr log_ratio_nth(unsigned n);
// Partial-fraction forms: (-1)^{n-1} (n-1)! [(x+1)^{-n} -+ (x-1)^{-n}]
// for ln((1+x)/(1-x)) (minus) and ln(1-x^2) (plus).
ClosedFormExpr log_ratio_direct(unsigned n);
ClosedFormExpr log_one_minus_sq_direct(unsigned n);

// d^n/dx^n of ln(1+x^2).
ClosedFormExpr log_one_plus_sq_nth(unsigned n);

// d^n/dx^n of (1 + sign x^2)^alpha for rational alpha outside {0} and the
// positive integers. Throws std::invalid_argument for excluded alpha.
ClosedFormExpr power_one_pm_sq_nth(int sign, const Rational& alpha, unsigned n);

// d^n/dx^n of h(x) = f(x^2) at x0, given exact derivative values
// f_derivs(j) = f^(j)(x0^2) for j <= n. The summation carries the factor
// 2^{k+l} required by the chain rule (the corresponding published display
// omits it; see the identity h'' = 2 f'(x^2) + 4 x^2 f''(x^2)).
BasisValue f_of_square_nth(const std::function<BasisValue(unsigned)>& f_derivs,
                           unsigned n, const Rational& x0);

// d^n/dx^n of sin(e^{sign x}) or cos(e^{sign x}): Stirling-weighted sum of
// phase-shifted trig factors times e^{sign k x}.
ClosedFormExpr trig_exp_nth(bool is_sin, int sign, unsigned n);

// CLI-facing registry of derivative families. build(n, alpha) ignores alpha
// unless takes_alpha; check_domain(x0, alpha) throws std::domain_error when
// x0 is outside the family's evaluation domain.
struct FamilyInfo {
  std::string_view name;
  bool takes_alpha = false;
  std::function<ClosedFormExpr(unsigned, const Rational&)> build;
  std::function<void(const Rational&, const Rational&)> check_domain;
};
const std::vector<FamilyInfo>& family_registry();
const FamilyInfo* find_family(std::string_view name);

}  // namespace derivkit
