#pragma once

#include "derivkit/basis_jet.hpp"

#include <memory>
#include <span>
#include <vector>

namespace derivkit {

// A composable function description over the elementary vocabulary the jet
// oracle understands. Built with the fx::* helpers below.
struct FuncExpr {
  enum class Op {
    Var,
    Const,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    PowInt,
    PowRat,
    Exp,
    Log,
    Sin,
    Cos,
    Arcsin,
    Arccos,
    Arctan,
  };

  Op op = Op::Var;
  Rational value;      // Const
  long int_exponent = 0;  // PowInt
  Rational exponent;   // PowRat
  std::shared_ptr<const FuncExpr> a, b;
};

using FuncPtr = std::shared_ptr<const FuncExpr>;

namespace fx {
FuncPtr var();
FuncPtr constant(Rational v);
FuncPtr add(FuncPtr a, FuncPtr b);
FuncPtr sub(FuncPtr a, FuncPtr b);
FuncPtr mul(FuncPtr a, FuncPtr b);
FuncPtr div(FuncPtr a, FuncPtr b);
FuncPtr neg(FuncPtr a);
FuncPtr pow_int(FuncPtr a, long e);
FuncPtr pow_rat(FuncPtr a, Rational alpha);
FuncPtr exp(FuncPtr a);
FuncPtr log(FuncPtr a);
FuncPtr sin(FuncPtr a);
FuncPtr cos(FuncPtr a);
FuncPtr arcsin(FuncPtr a);
FuncPtr arccos(FuncPtr a);
FuncPtr arctan(FuncPtr a);
}  // namespace fx

// Taylor expansion of f about x0, exact on the symbol basis.
BasisJet expand_jet(const FuncExpr& f, const Rational& x0, std::size_t order);

// n! * (coefficient n) of the expansion of f about x0.
BasisValue nth_derivative_via_jet(const FuncExpr& f, const Rational& x0, unsigned n);

// Higher-order chain rule through partial Bell polynomials: given
// outer_derivs[k-1] = f^(k)(h(x0)) and inner_derivs[j-1] = h^(j)(x0) for
// orders 1..n, returns d^n/dx^n f(h(x)) at x0 as
// sum_k f^(k)(h(x0)) * B_{n,k}(h', ..., h^{(n-k+1)}).
// Independent of jet propagation: the Bell values come from partition
// enumeration.
BasisValue faa_di_bruno(std::span<const BasisValue> outer_derivs,
                        std::span<const Rational> inner_derivs, unsigned n);

// Derivative polynomials of the tangent: P_0(t) = t, P_{n+1} = (1 + t^2) P_n',
// so that tan^(n) x = P_n(tan x). Coefficient i of the result is the
// coefficient of t^i.
std::vector<Rational> tan_derivative_poly(unsigned n);
// Same for the cotangent via R_{n+1} = -(1 + t^2) R_n', R_0(t) = t, so that
// cot^(n) x = R_n(cot x).
std::vector<Rational> cot_derivative_poly(unsigned n);

// cos^{n+1}(x0) * tan^(n)(x0) on the sin/cos angle basis: the homogenized
// polynomial sum_i p_i sin^i(x0) cos^{n+1-i}(x0) reduced to multiple angles.
BasisValue tan_nth_cleared(unsigned n, const Rational& x0);
// sin^{n+1}(x0) * cot^(n)(x0), reduced the same way.
BasisValue cot_nth_cleared(unsigned n, const Rational& x0);

}  // namespace derivkit
