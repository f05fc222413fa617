#include "derivkit/basis.hpp"

#include <stdexcept>

namespace derivkit {

std::string Symbol::str() const {
  switch (kind) {
    case Kind::Unit:
      return "1";
    case Kind::Sin:
      return "sin(" + to_string(p1) + ")";
    case Kind::Cos:
      return "cos(" + to_string(p1) + ")";
    case Kind::Exp:
      return "exp(" + to_string(p1) + ")";
    case Kind::Log:
      return "log(" + to_string(p1) + ")";
    case Kind::Pow:
      return "pow(" + to_string(p1) + "," + to_string(p2) + ")";
    case Kind::ArcsinConst:
      return "arcsin(" + to_string(p1) + ")";
    case Kind::ArccosConst:
      return "arccos(" + to_string(p1) + ")";
    case Kind::ArctanConst:
      return "arctan(" + to_string(p1) + ")";
    case Kind::SinOfExp:
    case Kind::CosOfExp: {
      std::string s = (kind == Kind::SinOfExp ? "sin" : "cos");
      s += "(exp(" + to_string(p1) + "))";
      if (p2 != 0) s += "*exp(" + to_string(p1 * p2) + ")";
      return s;
    }
  }
  return "?";
}

BasisValue BasisValue::scalar(Rational v) {
  BasisValue b;
  b.add_unit(v);
  return b;
}

void BasisValue::add_raw(const Symbol& s, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void BasisValue::add_unit(const Rational& coeff) { add_raw(Symbol{}, coeff); }

void BasisValue::add_sin(const Rational& angle, const Rational& coeff) {
  if (angle == 0) return;  // sin 0 = 0
  if (angle < 0) {
    add_raw(Symbol{Symbol::Kind::Sin, -angle, Rational(0)}, -coeff);
  } else {
    add_raw(Symbol{Symbol::Kind::Sin, angle, Rational(0)}, coeff);
  }
}

void BasisValue::add_cos(const Rational& angle, const Rational& coeff) {
  if (angle == 0) {
    add_unit(coeff);
    return;
  }
  add_raw(Symbol{Symbol::Kind::Cos, angle < 0 ? -angle : angle, Rational(0)}, coeff);
}

void BasisValue::add_exp(const Rational& arg, const Rational& coeff) {
  if (arg == 0) {
    add_unit(coeff);
    return;
  }
  add_raw(Symbol{Symbol::Kind::Exp, arg, Rational(0)}, coeff);
}

void BasisValue::add_log(const Rational& arg, const Rational& coeff) {
  if (arg <= 0) throw std::domain_error("log of nonpositive value");
  if (arg == 1) return;  // log 1 = 0
  add_raw(Symbol{Symbol::Kind::Log, arg, Rational(0)}, coeff);
}

void BasisValue::add_pow(const Rational& base, const Rational& exponent,
                         const Rational& coeff) {
  if (base <= 0) throw std::domain_error("fractional power of nonpositive base");
  const Int whole = floor_of(exponent);
  const Rational frac = frac_part(exponent);
  Rational scaled = coeff;
  if (whole != 0) {
    long e = whole.convert_to<long>();
    scaled *= qpow(base, e);
  }
  if (frac == 0 || base == 1) {
    add_unit(scaled);
    return;
  }
  add_raw(Symbol{Symbol::Kind::Pow, base, frac}, scaled);
}

void BasisValue::add_arcsin_const(const Rational& point, const Rational& coeff) {
  if (point == 0) return;  // arcsin 0 = 0
  add_raw(Symbol{Symbol::Kind::ArcsinConst, point, Rational(0)}, coeff);
}

void BasisValue::add_arccos_const(const Rational& point, const Rational& coeff) {
  add_raw(Symbol{Symbol::Kind::ArccosConst, point, Rational(0)}, coeff);
}

void BasisValue::add_arctan_const(const Rational& point, const Rational& coeff) {
  if (point == 0) return;
  add_raw(Symbol{Symbol::Kind::ArctanConst, point, Rational(0)}, coeff);
}

void BasisValue::add_trig_of_exp(bool is_sin, const Rational& inner_exp_arg,
                                 const Rational& attached_power, const Rational& coeff) {
  if (inner_exp_arg == 0) {
    // e^0 = 1: plain sin(1)/cos(1) and the attached factor collapses.
    if (is_sin)
      add_sin(Rational(1), coeff);
    else
      add_cos(Rational(1), coeff);
    return;
  }
  add_raw(Symbol{is_sin ? Symbol::Kind::SinOfExp : Symbol::Kind::CosOfExp,
                 inner_exp_arg, attached_power},
          coeff);
}

BasisValue& BasisValue::operator+=(const BasisValue& other) {
  for (const auto& [s, c] : other.terms_) add_raw(s, c);
  return *this;
}

BasisValue& BasisValue::operator-=(const BasisValue& other) {
  for (const auto& [s, c] : other.terms_) add_raw(s, -c);
  return *this;
}

BasisValue BasisValue::scaled(const Rational& c) const {
  BasisValue out;
  if (c == 0) return out;
  for (const auto& [s, v] : terms_) out.terms_.emplace(s, v * c);
  return out;
}

BasisValue BasisValue::operator*(const BasisValue& other) const {
  BasisValue out;
  for (const auto& [sa, ca] : terms_)
    for (const auto& [sb, cb] : other.terms_) out += symbol_product(sa, sb, ca * cb);
  return out;
}

bool BasisValue::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.kind == Symbol::Kind::Unit;
}

Rational BasisValue::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::logic_error("BasisValue: not a rational value");
  return terms_.begin()->second;
}

std::string BasisValue::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c);
    if (s.kind != Symbol::Kind::Unit) out += "*" + s.str();
  }
  return out;
}

BasisValue symbol_product(const Symbol& a, const Symbol& b, const Rational& coeff) {
  BasisValue out;
  if (coeff == 0) return out;
  using K = Symbol::Kind;
  if (a.kind == K::Unit) {
    out.add_raw(b, coeff);
    return out;
  }
  if (b.kind == K::Unit) {
    out.add_raw(a, coeff);
    return out;
  }
  const Rational half(1, 2);
  if (a.kind == K::Exp && b.kind == K::Exp) {
    out.add_exp(a.p1 + b.p1, coeff);
    return out;
  }
  if (a.kind == K::Sin && b.kind == K::Sin) {
    // sin a sin b = (cos(a-b) - cos(a+b)) / 2
    out.add_cos(a.p1 - b.p1, coeff * half);
    out.add_cos(a.p1 + b.p1, -coeff * half);
    return out;
  }
  if (a.kind == K::Cos && b.kind == K::Cos) {
    out.add_cos(a.p1 - b.p1, coeff * half);
    out.add_cos(a.p1 + b.p1, coeff * half);
    return out;
  }
  if ((a.kind == K::Sin && b.kind == K::Cos) || (a.kind == K::Cos && b.kind == K::Sin)) {
    const Rational& sa = (a.kind == K::Sin) ? a.p1 : b.p1;
    const Rational& cb = (a.kind == K::Sin) ? b.p1 : a.p1;
    // sin a cos b = (sin(a+b) + sin(a-b)) / 2
    out.add_sin(sa + cb, coeff * half);
    out.add_sin(sa - cb, coeff * half);
    return out;
  }
  if (a.kind == K::Pow && b.kind == K::Pow && a.p1 == b.p1) {
    out.add_pow(a.p1, a.p2 + b.p2, coeff);
    return out;
  }
  // trig(e^u) e^{u p2} times e^a folds when a is a rational multiple of u.
  const auto trig_exp_fold = [&out, &coeff](const Symbol& trig, const Symbol& e) -> bool {
    if (e.p1 == 0) return false;
    const Rational shift = e.p1 / trig.p1;
    out.add_trig_of_exp(trig.kind == K::SinOfExp, trig.p1, trig.p2 + shift, coeff);
    return true;
  };
  if ((a.kind == K::SinOfExp || a.kind == K::CosOfExp) && b.kind == K::Exp &&
      trig_exp_fold(a, b))
    return out;
  if ((b.kind == K::SinOfExp || b.kind == K::CosOfExp) && a.kind == K::Exp &&
      trig_exp_fold(b, a))
    return out;
  throw std::logic_error("symbol_product: unsupported product " + a.str() + " * " + b.str());
}

}  // namespace derivkit
