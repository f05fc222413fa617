#include "derivkit/basis_jet.hpp"

#include "derivkit/combinatorics.hpp"

#include <stdexcept>

namespace derivkit {

namespace {

Jet require_unit(const BasisJet& u, const char* who) {
  if (!u.pure_unit())
    throw std::domain_error(std::string(who) + ": inner series must have rational coefficients");
  return u.unit_jet();
}

// Splits off the constant term: returns v with v[0] = 0 and u = u0 + v.
Jet drop_constant(Jet u) {
  u[0] = 0;
  return u;
}

}  // namespace

BasisJet::BasisJet(std::size_t order, const Rational& constant) : order_(order) {
  add_part(Symbol{}, Jet(order, constant));
}

BasisJet BasisJet::variable(std::size_t order, const Rational& x0) {
  BasisJet b(order);
  b.add_part(Symbol{}, Jet::variable(order, x0));
  return b;
}

void BasisJet::add_part(const Symbol& s, const Jet& jet) {
  if (jet.order() != order_) throw std::logic_error("BasisJet: order mismatch");
  if (jet.is_zero()) return;
  auto [it, inserted] = parts_.emplace(s, jet);
  if (!inserted) {
    it->second = it->second + jet;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

bool BasisJet::pure_unit() const {
  if (parts_.empty()) return true;
  return parts_.size() == 1 && parts_.begin()->first.kind == Symbol::Kind::Unit;
}

Jet BasisJet::unit_jet() const {
  if (parts_.empty()) return Jet(order_);
  if (!pure_unit()) throw std::logic_error("BasisJet: not a pure rational jet");
  return parts_.begin()->second;
}

BasisJet BasisJet::operator-() const {
  BasisJet out(order_);
  for (const auto& [s, j] : parts_) out.add_part(s, -j);
  return out;
}

BasisJet operator+(const BasisJet& a, const BasisJet& b) {
  const std::size_t n = std::min(a.order(), b.order());
  BasisJet out(n);
  auto shrink = [n](const Jet& j) {
    Jet t(n);
    for (std::size_t i = 0; i <= n; ++i) t[i] = j[i];
    return t;
  };
  for (const auto& [s, j] : a.parts_) out.add_part(s, shrink(j));
  for (const auto& [s, j] : b.parts_) out.add_part(s, shrink(j));
  return out;
}

BasisJet operator-(const BasisJet& a, const BasisJet& b) { return a + (-b); }

BasisJet operator*(const BasisJet& a, const BasisJet& b) {
  const std::size_t n = std::min(a.order(), b.order());
  BasisJet out(n);
  auto shrink = [n](const Jet& j) {
    Jet t(n);
    for (std::size_t i = 0; i <= n; ++i) t[i] = j[i];
    return t;
  };
  for (const auto& [sa, ja] : a.parts_) {
    for (const auto& [sb, jb] : b.parts_) {
      const Jet prod = shrink(ja) * shrink(jb);
      const BasisValue combo = symbol_product(sa, sb, Rational(1));
      for (const auto& [sym, c] : combo.terms()) out.add_part(sym, prod.scaled(c));
    }
  }
  return out;
}

BasisJet operator/(const BasisJet& a, const BasisJet& b) {
  const Jet divisor = require_unit(b, "basis jet division");
  const std::size_t n = std::min(a.order(), b.order());
  BasisJet out(n);
  auto shrink = [n](const Jet& j) {
    Jet t(n);
    for (std::size_t i = 0; i <= n; ++i) t[i] = j[i];
    return t;
  };
  for (const auto& [s, j] : a.parts_) out.add_part(s, shrink(j) / shrink(divisor));
  return out;
}

BasisJet BasisJet::scaled(const Rational& c) const {
  BasisJet out(order_);
  if (c == 0) return out;
  for (const auto& [s, j] : parts_) out.add_part(s, j.scaled(c));
  return out;
}

BasisJet BasisJet::pow_int(long e) const {
  if (e < 0) {
    const Jet u = unit_jet();
    BasisJet out(order_);
    out.add_part(Symbol{}, u.pow_int(e));
    return out;
  }
  BasisJet acc(order_, Rational(1));
  BasisJet base = *this;
  unsigned long ee = static_cast<unsigned long>(e);
  while (ee != 0) {
    if (ee & 1ul) acc = acc * base;
    base = base * base;
    ee >>= 1ul;
  }
  return acc;
}

BasisValue BasisJet::coefficient(std::size_t j) const {
  BasisValue v;
  for (const auto& [s, jet] : parts_) v.add_raw(s, jet[j]);
  return v;
}

BasisValue BasisJet::derivative(unsigned n) const {
  BasisValue v = coefficient(n);
  return v.scaled(Rational(factorial(n)));
}

BasisJet bj_exp(const BasisJet& u) {
  const Jet in = require_unit(u, "exp");
  const Jet series = jet_exp(drop_constant(in));
  BasisJet out(u.order());
  BasisValue head;
  head.add_exp(in[0], Rational(1));
  for (const auto& [s, c] : head.terms()) out.add_part(s, series.scaled(c));
  return out;
}

BasisJet bj_sin(const BasisJet& u) {
  const Jet in = require_unit(u, "sin");
  Jet s(u.order()), c(u.order());
  jet_sin_cos(drop_constant(in), s, c);
  // sin(u0 + v) = sin(u0) cos(v) + cos(u0) sin(v)
  BasisJet out(u.order());
  BasisValue sin0, cos0;
  sin0.add_sin(in[0], Rational(1));
  cos0.add_cos(in[0], Rational(1));
  for (const auto& [sym, q] : sin0.terms()) out.add_part(sym, c.scaled(q));
  for (const auto& [sym, q] : cos0.terms()) out.add_part(sym, s.scaled(q));
  return out;
}

BasisJet bj_cos(const BasisJet& u) {
  const Jet in = require_unit(u, "cos");
  Jet s(u.order()), c(u.order());
  jet_sin_cos(drop_constant(in), s, c);
  // cos(u0 + v) = cos(u0) cos(v) - sin(u0) sin(v)
  BasisJet out(u.order());
  BasisValue sin0, cos0;
  sin0.add_sin(in[0], Rational(1));
  cos0.add_cos(in[0], Rational(1));
  for (const auto& [sym, q] : cos0.terms()) out.add_part(sym, c.scaled(q));
  for (const auto& [sym, q] : sin0.terms()) out.add_part(sym, s.scaled(-q));
  return out;
}

BasisJet bj_log(const BasisJet& u) {
  const Jet in = require_unit(u, "log");
  if (in[0] <= 0) throw std::domain_error("log: expansion point outside domain");
  const Jet series = jet_log(in.scaled(Rational(1) / in[0]));
  BasisJet out(u.order());
  out.add_part(Symbol{}, series);
  BasisValue head;
  head.add_log(in[0], Rational(1));
  for (const auto& [s, c] : head.terms()) out.add_part(s, Jet(u.order(), c));
  return out;
}

BasisJet bj_pow(const BasisJet& u, const Rational& alpha) {
  if (is_integer(alpha)) return u.pow_int(num(alpha).convert_to<long>());
  const Jet in = require_unit(u, "pow");
  if (in[0] <= 0) throw std::domain_error("pow: fractional power needs positive base");
  const Jet series = jet_pow(in.scaled(Rational(1) / in[0]), alpha);
  // u^alpha = u0^alpha * (u/u0)^alpha, with u0^alpha carried by a Pow symbol.
  BasisValue head;
  head.add_pow(in[0], alpha, Rational(1));
  BasisJet out(u.order());
  for (const auto& [s, c] : head.terms()) out.add_part(s, series.scaled(c));
  return out;
}

BasisJet bj_arcsin(const BasisJet& u) {
  const Jet in = require_unit(u, "arcsin");
  if (in[0] <= -1 || in[0] >= 1) throw std::domain_error("arcsin: |x0| must be < 1");
  const BasisJet one(u.order(), Rational(1));
  const BasisJet radical = bj_pow(one - u * u, Rational(-1, 2));
  // d/dx arcsin(u) = u' (1 - u^2)^{-1/2}; integrate with symbolic constant.
  // The top coefficient of the integrand is never consumed, so padding u'
  // back to full order is harmless.
  Jet uprime(u.order());
  {
    const Jet d = jet_derivative(in);
    for (std::size_t j = 0; j + 1 <= u.order(); ++j) uprime[j] = d[j];
  }
  BasisJet up(u.order());
  up.add_part(Symbol{}, uprime);
  const BasisJet integrand = up * radical;
  BasisJet out(u.order());
  for (const auto& [s, jet] : integrand.parts()) {
    Jet integral(u.order());
    for (std::size_t j = 1; j <= u.order(); ++j) integral[j] = jet[j - 1] / Rational(j);
    out.add_part(s, integral);
  }
  BasisValue constant;
  constant.add_arcsin_const(in[0], Rational(1));
  for (const auto& [s, c] : constant.terms()) out.add_part(s, Jet(u.order(), c));
  return out;
}

BasisJet bj_arccos(const BasisJet& u) {
  const Jet in = require_unit(u, "arccos");
  if (in[0] <= -1 || in[0] >= 1) throw std::domain_error("arccos: |x0| must be < 1");
  BasisJet out = -bj_arcsin(u);
  // Replace the constant -arcsin(x0) by arccos(x0).
  BasisValue fix;
  fix.add_arcsin_const(in[0], Rational(1));
  fix.add_arccos_const(in[0], Rational(1));
  for (const auto& [s, c] : fix.terms()) out.add_part(s, Jet(u.order(), c));
  return out;
}

BasisJet bj_arctan(const BasisJet& u) {
  const Jet in = require_unit(u, "arctan");
  const std::size_t n = u.order();
  // d/dx arctan(u) = u' / (1 + u^2), a rational series.
  Jet uprime(n);
  {
    const Jet d = jet_derivative(in);
    for (std::size_t j = 0; j + 1 <= n; ++j) uprime[j] = d[j];
  }
  const Jet one_plus = Jet(n, Rational(1)) + in * in;
  const Jet integrand = uprime / one_plus;
  Jet integral(n);
  for (std::size_t j = 1; j <= n; ++j) integral[j] = integrand[j - 1] / Rational(j);
  BasisJet out(n);
  out.add_part(Symbol{}, integral);
  BasisValue constant;
  constant.add_arctan_const(in[0], Rational(1));
  for (const auto& [s, c] : constant.terms()) out.add_part(s, Jet(n, c));
  return out;
}

}  // namespace derivkit
