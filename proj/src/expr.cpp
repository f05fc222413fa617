#include "derivkit/expr.hpp"

#include <stdexcept>

namespace derivkit {

std::string Atom::str() const {
  switch (tag) {
    case Tag::X:
      return "x";
    case Tag::T:
      return "t";
    case Tag::OneMinusXSq:
      return "(1-x^2)";
    case Tag::OnePlusXSq:
      return "(1+x^2)";
    case Tag::XPlusOne:
      return "(x+1)";
    case Tag::XMinusOne:
      return "(x-1)";
    case Tag::SinF:
    case Tag::CosF: {
      const std::string fn = tag == Tag::SinF ? "sin" : "cos";
      switch (inner) {
        case Inner::LinX:
          if (param == 1) return fn + "(x)";
          return fn + "(" + std::to_string(param) + "x)";
        case Inner::Sq:
          return fn + "(x^2)";
        case Inner::ExpX:
          return fn + (param > 0 ? "(exp(x))" : "(exp(-x))");
        default:
          break;
      }
      return fn + "(?)";
    }
    case Tag::ExpF:
      switch (inner) {
        case Inner::LinX:
          return param > 0 ? "exp(x)" : "exp(-x)";
        case Inner::Sq:
          return param > 0 ? "exp(x^2)" : "exp(-x^2)";
        case Inner::RecipT:
          return param > 0 ? "exp(1/t)" : "exp(-1/t)";
        default:
          break;
      }
      return "exp(?)";
    case Tag::Head:
      switch (head) {
        case HeadFn::Arcsin:
          return "arcsin(x)";
        case HeadFn::Arccos:
          return "arccos(x)";
        case HeadFn::Arctan:
          return "arctan(x)";
        case HeadFn::LogRatio:
          return "log((1+x)/(1-x))";
        case HeadFn::Log1px2:
          return "log(1+x^2)";
        case HeadFn::Log1mx2:
          return "log(1-x^2)";
        case HeadFn::None:
          break;
      }
      return "?";
  }
  return "?";
}

void ClosedFormExpr::add_term(const Rational& coeff, FactorMap factors) {
  if (coeff == 0) return;
  for (auto it = factors.begin(); it != factors.end();) {
    if (it->second == 0)
      it = factors.erase(it);
    else
      ++it;
  }
  auto [it, inserted] = terms_.emplace(std::move(factors), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ClosedFormExpr ClosedFormExpr::negated() const {
  ClosedFormExpr out;
  for (const auto& [factors, coeff] : terms_) out.add_term(-coeff, factors);
  return out;
}

std::string ClosedFormExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [factors, coeff] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += to_string(coeff);
    for (const auto& [atom, exponent] : factors) {
      out += " * " + atom.str();
      if (exponent != 1) {
        if (is_integer(exponent) && exponent > 0)
          out += "^" + to_string(exponent);
        else
          out += "^(" + to_string(exponent) + ")";
      }
    }
  }
  return out;
}

ReducedPhase reduce_quarter_turns(bool base_is_sin, long quarter_turns) {
  long q = quarter_turns % 4;
  if (q < 0) q += 4;
  if (!base_is_sin) q = (q + 1) % 4;  // cos(u + q pi/2) = sin(u + (q+1) pi/2)
  switch (q) {
    case 0:
      return {true, 1};
    case 1:
      return {false, 1};
    case 2:
      return {true, -1};
    default:
      return {false, -1};
  }
}

namespace {

long require_integer_exponent(const Rational& e, const char* what) {
  if (!is_integer(e)) throw std::logic_error(std::string(what) + ": fractional exponent");
  return num(e).convert_to<long>();
}

}  // namespace

Evaluation evaluate_at(const ClosedFormExpr& expr, const Rational& x0) {
  Evaluation result;
  for (const auto& [factors, coeff] : expr.terms()) {
    Rational scalar = coeff;
    BasisValue symbolic = BasisValue::scalar(Rational(1));
    bool term_is_zero = false;

    for (const auto& [atom, exponent] : factors) {
      using Tag = Atom::Tag;
      using Inner = Atom::Inner;
      switch (atom.tag) {
        case Tag::X:
        case Tag::T: {
          const long e = require_integer_exponent(exponent, "variable power");
          if (x0 == 0 && e < 0) throw std::domain_error("evaluation at a pole");
          if (x0 == 0 && e > 0) {
            term_is_zero = true;
            break;
          }
          scalar *= qpow(x0, e);
          break;
        }
        case Tag::OneMinusXSq:
        case Tag::OnePlusXSq:
        case Tag::XPlusOne:
        case Tag::XMinusOne: {
          Rational base;
          if (atom.tag == Tag::OneMinusXSq) base = Rational(1) - x0 * x0;
          if (atom.tag == Tag::OnePlusXSq) base = Rational(1) + x0 * x0;
          if (atom.tag == Tag::XPlusOne) base = x0 + 1;
          if (atom.tag == Tag::XMinusOne) base = x0 - 1;
          if (is_integer(exponent)) {
            const long e = num(exponent).convert_to<long>();
            if (base == 0) {
              if (e < 0) throw std::domain_error("evaluation at a pole");
              if (e > 0) {
                term_is_zero = true;
                break;
              }
              break;  // 0^0 treated as the empty product
            }
            scalar *= qpow(base, e);
          } else {
            if (base <= 0)
              throw std::domain_error("evaluation point outside the function's domain");
            BasisValue p;
            p.add_pow(base, exponent, Rational(1));
            symbolic = symbolic * p;
          }
          break;
        }
        case Tag::SinF:
        case Tag::CosF: {
          const bool is_sin = atom.tag == Tag::SinF;
          const long e = require_integer_exponent(exponent, "trig power");
          if (atom.inner == Inner::ExpX) {
            if (e != 1) throw std::logic_error("unsupported power of sin/cos(exp(x))");
            BasisValue v;
            v.add_trig_of_exp(is_sin, Rational(atom.param) * x0, Rational(0), Rational(1));
            symbolic = symbolic * v;
            break;
          }
          const Rational angle = atom.inner == Inner::Sq
                                     ? x0 * x0
                                     : Rational(atom.param) * x0;
          if (e >= 0) {
            BasisValue v;
            if (is_sin)
              v.add_sin(angle, Rational(1));
            else
              v.add_cos(angle, Rational(1));
            for (long i = 0; i < e; ++i) symbolic = symbolic * v;
            if (e == 0) break;
            break;
          }
          // Negative trig powers become the evaluation's divisor.
          if (angle == 0) {
            if (is_sin) throw std::domain_error("evaluation at a pole");
            break;  // cos(0)^e = 1
          }
          const Symbol sym{is_sin ? Symbol::Kind::Sin : Symbol::Kind::Cos,
                           angle < 0 ? -angle : angle, Rational(0)};
          Rational sign_fix(1);
          if (angle < 0 && is_sin) {
            // sin(-a)^e = (-1)^e sin(a)^e
            if ((-e) % 2 == 1) sign_fix = -1;
          }
          scalar *= sign_fix;
          if (result.divisor && !(*result.divisor == sym))
            throw std::logic_error("mixed divisor symbols in one expression");
          result.divisor = sym;
          // All terms of tan/cot share one prefactor power.
          result.divisor_power = static_cast<unsigned>(-e);
          break;
        }
        case Tag::ExpF: {
          Rational arg;
          if (atom.inner == Inner::LinX) arg = Rational(atom.param) * x0;
          if (atom.inner == Inner::Sq) arg = Rational(atom.param) * x0 * x0;
          if (atom.inner == Inner::RecipT) {
            if (x0 == 0) throw std::domain_error("evaluation at a pole");
            arg = Rational(atom.param) / x0;
          }
          BasisValue v;
          v.add_exp(arg * exponent, Rational(1));
          symbolic = symbolic * v;
          break;
        }
        case Tag::Head: {
          if (exponent != 1) throw std::logic_error("unsupported power of a head atom");
          BasisValue v;
          using HeadFn = Atom::HeadFn;
          switch (atom.head) {
            case HeadFn::Arcsin:
              if (x0 <= -1 || x0 >= 1)
                throw std::domain_error("evaluation point outside the function's domain");
              v.add_arcsin_const(x0, Rational(1));
              break;
            case HeadFn::Arccos:
              if (x0 <= -1 || x0 >= 1)
                throw std::domain_error("evaluation point outside the function's domain");
              v.add_arccos_const(x0, Rational(1));
              break;
            case HeadFn::Arctan:
              v.add_arctan_const(x0, Rational(1));
              break;
            case HeadFn::LogRatio: {
              if (x0 <= -1 || x0 >= 1)
                throw std::domain_error("evaluation point outside the function's domain");
              v.add_log((Rational(1) + x0) / (Rational(1) - x0), Rational(1));
              break;
            }
            case HeadFn::Log1px2:
              v.add_log(Rational(1) + x0 * x0, Rational(1));
              break;
            case HeadFn::Log1mx2:
              if (x0 <= -1 || x0 >= 1)
                throw std::domain_error("evaluation point outside the function's domain");
              v.add_log(Rational(1) - x0 * x0, Rational(1));
              break;
            case HeadFn::None:
              throw std::logic_error("head atom without a function");
          }
          // Head values may be zero (arcsin(0)); the term then contributes nothing.
          symbolic = symbolic * v;
          break;
        }
      }
      if (term_is_zero) break;
    }
    if (term_is_zero) continue;
    result.value += symbolic.scaled(scalar);
  }
  return result;
}

}  // namespace derivkit
