#pragma once

#include "derivkit/basis.hpp"
#include "derivkit/jet.hpp"

#include <map>

namespace derivkit {

// A jet with coefficients on the transcendental symbol basis: the represented
// function equals sum over symbols of (symbol value) * (rational jet). Used to
// keep series of exp/sin/log/... exact at rational expansion points by
// splitting the constant term onto a symbol, e.g.
//   sin(u0 + v) = sin(u0) cos(v) + cos(u0) sin(v).
class BasisJet {
 public:
  explicit BasisJet(std::size_t order) : order_(order) {}
  BasisJet(std::size_t order, const Rational& constant);

  static BasisJet variable(std::size_t order, const Rational& x0);

  std::size_t order() const { return order_; }

  void add_part(const Symbol& s, const Jet& jet);

  bool pure_unit() const;
  // The Unit jet; requires pure_unit() (a zero BasisJet counts).
  Jet unit_jet() const;

  BasisJet operator-() const;
  friend BasisJet operator+(const BasisJet& a, const BasisJet& b);
  friend BasisJet operator-(const BasisJet& a, const BasisJet& b);
  friend BasisJet operator*(const BasisJet& a, const BasisJet& b);
  // Divisor must be pure Unit with nonzero constant term.
  friend BasisJet operator/(const BasisJet& a, const BasisJet& b);

  BasisJet scaled(const Rational& c) const;
  BasisJet pow_int(long e) const;

  BasisValue coefficient(std::size_t j) const;
  // n! * coefficient n, on the symbol basis.
  BasisValue derivative(unsigned n) const;

  const std::map<Symbol, Jet>& parts() const { return parts_; }

 private:
  std::size_t order_;
  std::map<Symbol, Jet> parts_;
};

// Elementary functions lifted to basis jets. Inputs must be pure Unit jets
// (exactness requires a rational inner series); constants are factored onto
// symbols as needed. Domain violations throw std::domain_error.
BasisJet bj_exp(const BasisJet& u);
BasisJet bj_sin(const BasisJet& u);
BasisJet bj_cos(const BasisJet& u);
BasisJet bj_log(const BasisJet& u);                        // u0 > 0
BasisJet bj_pow(const BasisJet& u, const Rational& alpha); // u0 > 0 unless alpha integral
BasisJet bj_arcsin(const BasisJet& u);                     // |u0| < 1
BasisJet bj_arccos(const BasisJet& u);
BasisJet bj_arctan(const BasisJet& u);

}  // namespace derivkit
