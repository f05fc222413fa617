#include "derivkit/oracle.hpp"

#include "derivkit/bell.hpp"
#include "derivkit/combinatorics.hpp"

#include <stdexcept>

namespace derivkit {

namespace fx {

namespace {
FuncPtr node(FuncExpr::Op op, FuncPtr a = nullptr, FuncPtr b = nullptr) {
  auto e = std::make_shared<FuncExpr>();
  e->op = op;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}
}  // namespace

FuncPtr var() { return node(FuncExpr::Op::Var); }
FuncPtr constant(Rational v) {
  auto e = std::make_shared<FuncExpr>();
  e->op = FuncExpr::Op::Const;
  e->value = std::move(v);
  return e;
}
FuncPtr add(FuncPtr a, FuncPtr b) { return node(FuncExpr::Op::Add, std::move(a), std::move(b)); }
FuncPtr sub(FuncPtr a, FuncPtr b) { return node(FuncExpr::Op::Sub, std::move(a), std::move(b)); }
FuncPtr mul(FuncPtr a, FuncPtr b) { return node(FuncExpr::Op::Mul, std::move(a), std::move(b)); }
FuncPtr div(FuncPtr a, FuncPtr b) { return node(FuncExpr::Op::Div, std::move(a), std::move(b)); }
FuncPtr neg(FuncPtr a) { return node(FuncExpr::Op::Neg, std::move(a)); }
FuncPtr pow_int(FuncPtr a, long e) {
  auto n = std::make_shared<FuncExpr>();
  n->op = FuncExpr::Op::PowInt;
  n->a = std::move(a);
  n->int_exponent = e;
  return n;
}
FuncPtr pow_rat(FuncPtr a, Rational alpha) {
  auto n = std::make_shared<FuncExpr>();
  n->op = FuncExpr::Op::PowRat;
  n->a = std::move(a);
  n->exponent = std::move(alpha);
  return n;
}
FuncPtr exp(FuncPtr a) { return node(FuncExpr::Op::Exp, std::move(a)); }
FuncPtr log(FuncPtr a) { return node(FuncExpr::Op::Log, std::move(a)); }
FuncPtr sin(FuncPtr a) { return node(FuncExpr::Op::Sin, std::move(a)); }
FuncPtr cos(FuncPtr a) { return node(FuncExpr::Op::Cos, std::move(a)); }
FuncPtr arcsin(FuncPtr a) { return node(FuncExpr::Op::Arcsin, std::move(a)); }
FuncPtr arccos(FuncPtr a) { return node(FuncExpr::Op::Arccos, std::move(a)); }
FuncPtr arctan(FuncPtr a) { return node(FuncExpr::Op::Arctan, std::move(a)); }

}  // namespace fx

BasisJet expand_jet(const FuncExpr& f, const Rational& x0, std::size_t order) {
  using Op = FuncExpr::Op;
  switch (f.op) {
    case Op::Var:
      return BasisJet::variable(order, x0);
    case Op::Const:
      return BasisJet(order, f.value);
    case Op::Add:
      return expand_jet(*f.a, x0, order) + expand_jet(*f.b, x0, order);
    case Op::Sub:
      return expand_jet(*f.a, x0, order) - expand_jet(*f.b, x0, order);
    case Op::Mul:
      return expand_jet(*f.a, x0, order) * expand_jet(*f.b, x0, order);
    case Op::Div:
      return expand_jet(*f.a, x0, order) / expand_jet(*f.b, x0, order);
    case Op::Neg:
      return -expand_jet(*f.a, x0, order);
    case Op::PowInt:
      return expand_jet(*f.a, x0, order).pow_int(f.int_exponent);
    case Op::PowRat:
      return bj_pow(expand_jet(*f.a, x0, order), f.exponent);
    case Op::Exp:
      return bj_exp(expand_jet(*f.a, x0, order));
    case Op::Log:
      return bj_log(expand_jet(*f.a, x0, order));
    case Op::Sin:
      return bj_sin(expand_jet(*f.a, x0, order));
    case Op::Cos:
      return bj_cos(expand_jet(*f.a, x0, order));
    case Op::Arcsin:
      return bj_arcsin(expand_jet(*f.a, x0, order));
    case Op::Arccos:
      return bj_arccos(expand_jet(*f.a, x0, order));
    case Op::Arctan:
      return bj_arctan(expand_jet(*f.a, x0, order));
  }
  throw std::logic_error("expand_jet: unreachable");
}

BasisValue nth_derivative_via_jet(const FuncExpr& f, const Rational& x0, unsigned n) {
  return expand_jet(f, x0, n).derivative(n);
}

BasisValue faa_di_bruno(std::span<const BasisValue> outer_derivs,
                        std::span<const Rational> inner_derivs, unsigned n) {
  if (n < 1) throw std::invalid_argument("faa_di_bruno: n must be >= 1");
  if (outer_derivs.size() < n || inner_derivs.size() < n)
    throw std::invalid_argument("faa_di_bruno: derivative data up to order n required");
  BasisValue total;
  for (unsigned k = 1; k <= n; ++k) {
    const BellPoly bell = bell_general(n, k);
    const Rational weight =
        bell_evaluate(bell, inner_derivs.subspan(0, n - k + 1));
    total += outer_derivs[k - 1].scaled(weight);
  }
  return total;
}

namespace {

std::vector<Rational> poly_derivative(const std::vector<Rational>& p) {
  if (p.size() <= 1) return {Rational(0)};
  std::vector<Rational> d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(i);
  return d;
}

// (1 + t^2) * p
std::vector<Rational> mul_one_plus_tsq(const std::vector<Rational>& p) {
  std::vector<Rational> out(p.size() + 2, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + 2] += p[i];
  }
  return out;
}

// sum_i p_i A^i B^{d-i} on the angle basis, where A = first(x0), B = second(x0).
BasisValue homogenize(const std::vector<Rational>& p, unsigned degree, const Rational& x0,
                      bool first_is_sin) {
  BasisValue total;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    BasisValue monomial = BasisValue::scalar(p[i]);
    BasisValue factor_a, factor_b;
    if (first_is_sin) {
      factor_a.add_sin(x0, Rational(1));
      factor_b.add_cos(x0, Rational(1));
    } else {
      factor_a.add_cos(x0, Rational(1));
      factor_b.add_sin(x0, Rational(1));
    }
    for (std::size_t e = 0; e < i; ++e) monomial = monomial * factor_a;
    for (std::size_t e = 0; e < degree - i; ++e) monomial = monomial * factor_b;
    total += monomial;
  }
  return total;
}

}  // namespace

std::vector<Rational> tan_derivative_poly(unsigned n) {
  std::vector<Rational> p{Rational(0), Rational(1)};  // P_0 = t
  for (unsigned i = 0; i < n; ++i) p = mul_one_plus_tsq(poly_derivative(p));
  return p;
}

std::vector<Rational> cot_derivative_poly(unsigned n) {
  std::vector<Rational> p{Rational(0), Rational(1)};
  for (unsigned i = 0; i < n; ++i) {
    p = mul_one_plus_tsq(poly_derivative(p));
    for (auto& c : p) c = -c;
  }
  return p;
}

BasisValue tan_nth_cleared(unsigned n, const Rational& x0) {
  // deg P_n = n+1, so cos^{n+1} P_n(sin/cos) = sum_i p_i sin^i cos^{n+1-i}.
  return homogenize(tan_derivative_poly(n), n + 1, x0, /*first_is_sin=*/true);
}

BasisValue cot_nth_cleared(unsigned n, const Rational& x0) {
  return homogenize(cot_derivative_poly(n), n + 1, x0, /*first_is_sin=*/false);
}

}  // namespace derivkit
