#pragma once

#include "derivkit/numbers.hpp"

#include <map>
#include <string>
#include <tuple>

namespace derivkit {

// A fixed transcendental constant kept symbolic so that evaluation results
// stay exact: values are rational linear combinations of these symbols.
//
//   Unit          1
//   Sin / Cos     sin(a), cos(a) for rational a > 0
//   Exp           e^a for rational a != 0
//   Log           ln(a) for rational a > 0, a != 1
//   Pow           a^r for rational a > 0 and fractional exponent r in (0,1)
//   Arc*Const     arcsin(a) / arccos(a) / arctan(a)
//   Sin/CosOfExp  sin(e^a) * e^{p2*a} (resp. cos), for rational a != 0
//
// Products are reduced where the span is closed (angle addition for Sin/Cos,
// exponent addition for Exp, exponent folding for Pow with a shared base);
// any combination outside that closure throws, since no verification path in
// the library needs it.
struct Symbol {
  enum class Kind {
    Unit,
    Sin,
    Cos,
    Exp,
    Log,
    Pow,
    ArcsinConst,
    ArccosConst,
    ArctanConst,
    SinOfExp,
    CosOfExp,
  };

  Kind kind = Kind::Unit;
  Rational p1;  // angle / exponent / base / point
  Rational p2;  // Pow: fractional exponent; *OfExp: attached power of e^{p1}

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind == b.kind && a.p1 == b.p1 && a.p2 == b.p2;
  }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    return std::tie(a.kind, a.p1, a.p2) < std::tie(b.kind, b.p1, b.p2);
  }

  std::string str() const;
};

// Exact scalar on the symbol basis: sum of coeff * symbol with rational
// coefficients. Zero coefficients are never stored.
class BasisValue {
 public:
  BasisValue() = default;
  static BasisValue scalar(Rational v);

  // Adds coeff * symbol with normalization: sin(0) and log(1) vanish,
  // cos(0) / exp(0) fold to Unit, negative angles fold into the sign,
  // integral Pow exponents fold into the coefficient, and so on.
  void add_sin(const Rational& angle, const Rational& coeff);
  void add_cos(const Rational& angle, const Rational& coeff);
  void add_exp(const Rational& arg, const Rational& coeff);
  void add_log(const Rational& arg, const Rational& coeff);
  void add_pow(const Rational& base, const Rational& exponent, const Rational& coeff);
  void add_arcsin_const(const Rational& point, const Rational& coeff);
  void add_arccos_const(const Rational& point, const Rational& coeff);
  void add_arctan_const(const Rational& point, const Rational& coeff);
  void add_trig_of_exp(bool is_sin, const Rational& inner_exp_arg,
                       const Rational& attached_power, const Rational& coeff);
  void add_unit(const Rational& coeff);
  void add_raw(const Symbol& s, const Rational& coeff);

  BasisValue& operator+=(const BasisValue& other);
  BasisValue& operator-=(const BasisValue& other);
  friend BasisValue operator+(BasisValue a, const BasisValue& b) { return a += b; }
  friend BasisValue operator-(BasisValue a, const BasisValue& b) { return a -= b; }
  friend bool operator==(const BasisValue& a, const BasisValue& b) {
    return a.terms_ == b.terms_;
  }

  BasisValue scaled(const Rational& c) const;
  BasisValue operator*(const BasisValue& other) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // The Unit coefficient; requires is_rational().
  Rational rational_value() const;

  const std::map<Symbol, Rational>& terms() const { return terms_; }

  std::string str() const;

 private:
  std::map<Symbol, Rational> terms_;
};

// coeff_a * sym_a times coeff_b * sym_b, reduced onto the basis.
BasisValue symbol_product(const Symbol& a, const Symbol& b, const Rational& coeff);

}  // namespace derivkit
