#include "derivkit/numeric.hpp"

#include <mpfr.h>

#include <memory>
#include <stdexcept>

namespace derivkit {

namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& other) {
    if (this != &other) mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

Real from_rational(const Rational& q, mpfr_prec_t bits) {
  Real n(bits), d(bits);
  mpfr_set_str(n.get(), num(q).str().c_str(), 10, MPFR_RNDN);
  mpfr_set_str(d.get(), den(q).str().c_str(), 10, MPFR_RNDN);
  Real out(bits);
  mpfr_div(out.get(), n.get(), d.get(), MPFR_RNDN);
  return out;
}

Real symbol_value(const Symbol& s, mpfr_prec_t bits) {
  Real out(bits);
  using K = Symbol::Kind;
  switch (s.kind) {
    case K::Unit:
      mpfr_set_ui(out.get(), 1, MPFR_RNDN);
      return out;
    case K::Sin: {
      const Real a = from_rational(s.p1, bits);
      mpfr_sin(out.get(), a.get(), MPFR_RNDN);
      return out;
    }
    case K::Cos: {
      const Real a = from_rational(s.p1, bits);
      mpfr_cos(out.get(), a.get(), MPFR_RNDN);
      return out;
    }
    case K::Exp: {
      const Real a = from_rational(s.p1, bits);
      mpfr_exp(out.get(), a.get(), MPFR_RNDN);
      return out;
    }
    case K::Log: {
      const Real a = from_rational(s.p1, bits);
      mpfr_log(out.get(), a.get(), MPFR_RNDN);
      return out;
    }
    case K::Pow: {
      const Real base = from_rational(s.p1, bits);
      const Real e = from_rational(s.p2, bits);
      mpfr_pow(out.get(), base.get(), e.get(), MPFR_RNDN);
      return out;
    }
    case K::ArcsinConst: {
      const Real a = from_rational(s.p1, bits);
      mpfr_asin(out.get(), a.get(), MPFR_RNDN);
      return out;
    }
    case K::ArccosConst: {
      const Real a = from_rational(s.p1, bits);
      mpfr_acos(out.get(), a.get(), MPFR_RNDN);
      return out;
    }
    case K::ArctanConst: {
      const Real a = from_rational(s.p1, bits);
      mpfr_atan(out.get(), a.get(), MPFR_RNDN);
      return out;
    }
    case K::SinOfExp:
    case K::CosOfExp: {
      // trig(e^{p1}) * e^{p1 p2}
      const Real a = from_rational(s.p1, bits);
      Real inner(bits);
      mpfr_exp(inner.get(), a.get(), MPFR_RNDN);
      Real trig(bits);
      if (s.kind == K::SinOfExp)
        mpfr_sin(trig.get(), inner.get(), MPFR_RNDN);
      else
        mpfr_cos(trig.get(), inner.get(), MPFR_RNDN);
      const Real power_arg = from_rational(s.p1 * s.p2, bits);
      Real grow(bits);
      mpfr_exp(grow.get(), power_arg.get(), MPFR_RNDN);
      mpfr_mul(out.get(), trig.get(), grow.get(), MPFR_RNDN);
      return out;
    }
  }
  throw std::logic_error("symbol_value: unreachable");
}

Real basis_value(const BasisValue& v, mpfr_prec_t bits) {
  Real total(bits);
  for (const auto& [sym, coeff] : v.terms()) {
    const Real s = symbol_value(sym, bits);
    const Real c = from_rational(coeff, bits);
    Real term(bits);
    mpfr_mul(term.get(), s.get(), c.get(), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
  }
  return total;
}

std::string format(mpfr_srcptr v) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.Re", v) < 0)
    throw std::runtime_error("mpfr formatting failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace

std::string render_numeric(const BasisValue& value, unsigned bits) {
  const mpfr_prec_t prec = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
  return format(basis_value(value, prec).get());
}

std::string render_numeric(const Evaluation& value, unsigned bits) {
  const mpfr_prec_t prec = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
  Real total = basis_value(value.value, prec);
  if (value.divisor) {
    Real d = symbol_value(*value.divisor, prec);
    Real dp(prec);
    mpfr_pow_ui(dp.get(), d.get(), value.divisor_power, MPFR_RNDN);
    mpfr_div(total.get(), total.get(), dp.get(), MPFR_RNDN);
  }
  return format(total.get());
}

}  // namespace derivkit
