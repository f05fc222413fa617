#pragma once

#include "derivkit/basis.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace derivkit {

// One multiplicative factor of a closed-form term. Algebraic atoms evaluate
// to rationals at rational points; transcendental atoms carry an inner
// argument shape and evaluate onto the symbol basis.
struct Atom {
  enum class Tag {
    X,            // the variable x
    T,            // the variable t
    OneMinusXSq,  // 1 - x^2
    OnePlusXSq,   // 1 + x^2
    XPlusOne,     // x + 1
    XMinusOne,    // x - 1
    SinF,         // sin(inner)
    CosF,         // cos(inner)
    ExpF,         // exp(inner)
    Head,         // an underived function, used for order-0 expressions
  };
  enum class Inner {
    None,
    LinX,    // param * x for SinF/CosF (param = frequency >= 1),
             // or sign * x for ExpF (param = +-1)
    Sq,      // x^2; for ExpF param = +-1 selects exp(+-x^2)
    RecipT,  // param / t, param = +-1
    ExpX,    // e^{param * x}, param = +-1 (inner of sin/cos)
  };
  enum class HeadFn { None, Arcsin, Arccos, Arctan, LogRatio, Log1px2, Log1mx2 };

  Tag tag = Tag::X;
  Inner inner = Inner::None;
  int param = 0;
  HeadFn head = HeadFn::None;

  friend bool operator==(const Atom& a, const Atom& b) {
    return std::tie(a.tag, a.inner, a.param, a.head) ==
           std::tie(b.tag, b.inner, b.param, b.head);
  }
  friend bool operator<(const Atom& a, const Atom& b) {
    return std::tie(a.tag, a.inner, a.param, a.head) <
           std::tie(b.tag, b.inner, b.param, b.head);
  }

  std::string str() const;

  static Atom x() { return {Tag::X, Inner::None, 0, HeadFn::None}; }
  static Atom t() { return {Tag::T, Inner::None, 0, HeadFn::None}; }
  static Atom one_minus_xsq() { return {Tag::OneMinusXSq, Inner::None, 0, HeadFn::None}; }
  static Atom one_plus_xsq() { return {Tag::OnePlusXSq, Inner::None, 0, HeadFn::None}; }
  static Atom x_plus_one() { return {Tag::XPlusOne, Inner::None, 0, HeadFn::None}; }
  static Atom x_minus_one() { return {Tag::XMinusOne, Inner::None, 0, HeadFn::None}; }
  static Atom trig_linx(bool is_sin, int frequency) {
    return {is_sin ? Tag::SinF : Tag::CosF, Inner::LinX, frequency, HeadFn::None};
  }
  static Atom trig_sq(bool is_sin) {
    return {is_sin ? Tag::SinF : Tag::CosF, Inner::Sq, 1, HeadFn::None};
  }
  static Atom trig_expx(bool is_sin, int sign) {
    return {is_sin ? Tag::SinF : Tag::CosF, Inner::ExpX, sign, HeadFn::None};
  }
  static Atom exp_linx(int sign) { return {Tag::ExpF, Inner::LinX, sign, HeadFn::None}; }
  static Atom exp_sq(int sign) { return {Tag::ExpF, Inner::Sq, sign, HeadFn::None}; }
  static Atom exp_recip(int sign) { return {Tag::ExpF, Inner::RecipT, sign, HeadFn::None}; }
  static Atom head_atom(HeadFn fn) { return {Tag::Head, Inner::None, 0, fn}; }
};

using FactorMap = std::map<Atom, Rational>;

// A finite sum of terms coeff * prod atom^exponent in canonical form: factor
// maps never contain zero exponents, like terms are merged, zero coefficients
// are dropped, and trig phases were reduced at construction (only plain sin
// and cos atoms occur, with signs absorbed into coefficients).
class ClosedFormExpr {
 public:
  void add_term(const Rational& coeff, FactorMap factors);

  const std::map<FactorMap, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  ClosedFormExpr negated() const;

  friend bool operator==(const ClosedFormExpr& a, const ClosedFormExpr& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  std::map<FactorMap, Rational> terms_;
};

// sin or cos shifted by quarter-turns: trig(u + q pi/2) == sign * trig'(u).
struct ReducedPhase {
  bool is_sin;
  int sign;
};
ReducedPhase reduce_quarter_turns(bool base_is_sin, long quarter_turns);

// Result of exact evaluation: value / divisor_symbol^divisor_power, with the
// divisor present only for expressions carrying negative trig powers (the
// tan/cot prefactors).
struct Evaluation {
  BasisValue value;
  std::optional<Symbol> divisor;
  unsigned divisor_power = 0;
};

// Evaluates at a rational point; the variable is x or t according to the
// atoms present. Throws std::domain_error on zero divisors, nonpositive
// fractional-power bases, and log arguments outside the domain.
Evaluation evaluate_at(const ClosedFormExpr& expr, const Rational& x0);

}  // namespace derivkit
