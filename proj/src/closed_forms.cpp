#include "derivkit/closed_forms.hpp"

#include "derivkit/coeff_table.hpp"
#include "derivkit/combinatorics.hpp"

#include <stdexcept>

namespace derivkit {

namespace {

Rational dfac_ratio(long j) {
  // j!! / (j-1)!!
  return Rational(double_factorial(j), double_factorial(j - 1));
}

Rational sign_pow(int sign, unsigned e) {
  return (sign < 0 && e % 2 == 1) ? Rational(-1) : Rational(1);
}

// alpha (alpha-1) ... (alpha-j+1)
Rational falling(const Rational& alpha, unsigned j) {
  Rational prod{1};
  for (unsigned m = 1; m <= j; ++m) prod *= alpha - Rational(m - 1);
  return prod;
}

void add_trig_term(ClosedFormExpr& out, const Rational& coeff, FactorMap factors,
                   bool base_is_sin, long quarter_turns, const Atom& sin_atom,
                   const Atom& cos_atom, bool inner_is_zero) {
  const ReducedPhase ph = reduce_quarter_turns(base_is_sin, quarter_turns);
  const Rational signed_coeff = ph.sign < 0 ? -coeff : coeff;
  if (inner_is_zero) {
    // sin(0) kills the term; cos(0) leaves a plain coefficient.
    if (ph.is_sin) return;
    out.add_term(signed_coeff, std::move(factors));
    return;
  }
  factors.emplace(ph.is_sin ? sin_atom : cos_atom, Rational(1));
  out.add_term(signed_coeff, std::move(factors));
}

ClosedFormExpr tan_cot_nth(bool tangent, unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    // tan = sin/cos, cot = cos/sin
    FactorMap f{{Atom::trig_linx(true, 1), Rational(tangent ? 1 : -1)},
                {Atom::trig_linx(false, 1), Rational(tangent ? -1 : 1)}};
    out.add_term(Rational(1), std::move(f));
    return out;
  }
  const unsigned e = (n % 2 == 0) ? 1u : 0u;
  const Atom prefactor = Atom::trig_linx(!tangent, 1);  // cos for tan, sin for cot
  for (unsigned i = 0; 2 * i + e <= n - 1; ++i) {
    const unsigned freq = 2 * i + e;
    const Int c = tangent ? alpha_pq(n, freq) : beta_pq(n, freq);
    // Only the constant (zero-frequency) term carries the 1/2 weight.
    const Rational coeff = freq == 0 ? Rational(c, 2) : Rational(c);
    FactorMap factors{{prefactor, Rational(-static_cast<long>(n) - 1)}};
    // tan terms: sin(freq x + [n odd] pi/2); cot terms: cos(freq x).
    add_trig_term(out, coeff, std::move(factors), /*base_is_sin=*/tangent,
                  tangent ? static_cast<long>(1 - e) : 0L,
                  Atom::trig_linx(true, static_cast<int>(freq)),
                  Atom::trig_linx(false, static_cast<int>(freq)), freq == 0);
  }
  return out;
}

}  // namespace

ClosedFormExpr sincos_nth(bool is_sin, unsigned n) {
  ClosedFormExpr out;
  add_trig_term(out, Rational(1), {}, is_sin, static_cast<long>(n),
                Atom::trig_linx(true, 1), Atom::trig_linx(false, 1), false);
  return out;
}

ClosedFormExpr tan_nth(unsigned n) { return tan_cot_nth(true, n); }
ClosedFormExpr cot_nth(unsigned n) { return tan_cot_nth(false, n); }

ClosedFormExpr exp_recip_nth(int sign, unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::exp_recip(sign), Rational(1)}});
    return out;
  }
  for (unsigned k = 0; k <= n - 1; ++k) {
    Rational coeff{lah(n, n - k)};
    coeff *= sign_pow(-1, n);
    coeff *= sign_pow(sign, n - k);
    FactorMap factors{{Atom::exp_recip(sign), Rational(1)},
                      {Atom::t(), Rational(static_cast<long>(k) - 2L * n)}};
    out.add_term(coeff, std::move(factors));
  }
  return out;
}

ClosedFormExpr arcsin_nth(unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::head_atom(Atom::HeadFn::Arcsin), Rational(1)}});
    return out;
  }
  const CoeffTable table(n + 1);
  if (n % 2 == 1) {
    const unsigned k = (n + 1) / 2;
    for (unsigned i = 0; i <= k - 1; ++i) {
      FactorMap factors{{Atom::one_minus_xsq(),
                         -(Rational(k + i) - Rational(1, 2))}};
      if (i > 0) factors.emplace(Atom::x(), Rational(2 * i));
      out.add_term(Rational(table.at(n, 2 * i)), std::move(factors));
    }
  } else {
    const unsigned k = n / 2;
    for (unsigned i = 0; i <= k - 1; ++i) {
      FactorMap factors{{Atom::x(), Rational(2 * i + 1)},
                        {Atom::one_minus_xsq(),
                         -(Rational(k + i) + Rational(1, 2))}};
      out.add_term(Rational(table.at(n, 2 * i + 1)), std::move(factors));
    }
  }
  return out;
}

ClosedFormExpr arcsin_nth_unified(unsigned n) {
  ClosedFormExpr out;
  if (n == 0) return arcsin_nth(0);
  const CoeffTable table(n + 1);
  const unsigned even_bit = (n % 2 == 0) ? 1u : 0u;
  const unsigned odd_bit = 1u - even_bit;
  const unsigned upper = (n + odd_bit) / 2 - 1;
  for (unsigned i = 0; i <= upper; ++i) {
    const unsigned x_power = 2 * i + even_bit;
    const Rational exponent = Rational(i) + Rational(n + odd_bit, 2) +
                              (even_bit ? Rational(1, 2) : Rational(-1, 2));
    FactorMap factors{{Atom::one_minus_xsq(), -exponent}};
    if (x_power > 0) factors.emplace(Atom::x(), Rational(x_power));
    out.add_term(Rational(table.at(n, x_power)), std::move(factors));
  }
  return out;
}

ClosedFormExpr arccos_nth(unsigned n) {
  if (n == 0) {
    ClosedFormExpr out;
    out.add_term(Rational(1), {{Atom::head_atom(Atom::HeadFn::Arccos), Rational(1)}});
    return out;
  }
  return arcsin_nth(n).negated();
}

ClosedFormExpr inv_sqrt_one_minus_sq_nth(unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::one_minus_xsq(), Rational(-1, 2)}});
    return out;
  }
  const CoeffTable table(n + 2);
  const unsigned odd_bit = (n % 2 == 1) ? 1u : 0u;
  const unsigned upper = (n - odd_bit) / 2;
  for (unsigned k = 0; k <= upper; ++k) {
    const unsigned x_power = 2 * k + odd_bit;
    const Rational exponent =
        Rational(k) + Rational(n + (1 - odd_bit), 2) + Rational(odd_bit);
    FactorMap factors{{Atom::one_minus_xsq(), -exponent}};
    if (x_power > 0) factors.emplace(Atom::x(), Rational(x_power));
    out.add_term(Rational(table.at(n + 1, x_power)), std::move(factors));
  }
  return out;
}

ClosedFormExpr arctan_nth(unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::head_atom(Atom::HeadFn::Arctan), Rational(1)}});
    return out;
  }
  const CoeffTable table(n < 2 ? 2 : n);
  if (n % 2 == 0) {
    const unsigned l = n / 2;
    for (unsigned k = 0; k <= l - 1; ++k) {
      Rational coeff = dfac_ratio(2L * (k + l)) * Rational(table.at(2 * l, 2 * k + 1));
      coeff *= sign_pow(-1, l + k);
      FactorMap factors{{Atom::x(), Rational(2 * k + 1)},
                        {Atom::one_plus_xsq(), Rational(-static_cast<long>(l + 1 + k))}};
      out.add_term(coeff, std::move(factors));
    }
  } else {
    const unsigned l = (n + 1) / 2;
    for (unsigned k = 0; k <= l - 1; ++k) {
      Rational coeff =
          dfac_ratio(2L * (k + l - 1)) * Rational(table.at(2 * l - 1, 2 * k));
      coeff *= sign_pow(-1, l - 1 + k);
      FactorMap factors{{Atom::one_plus_xsq(), Rational(-static_cast<long>(l + k))}};
      if (k > 0) factors.emplace(Atom::x(), Rational(2 * k));
      out.add_term(coeff, std::move(factors));
    }
  }
  return out;
}

ClosedFormExpr exp_sq_nth(int sign, unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::exp_sq(sign), Rational(1)}});
    return out;
  }
  const CoeffTable table(n + 1);
  const Atom expf = Atom::exp_sq(sign);
  if (n % 2 == 0) {
    const unsigned l = n / 2;
    for (unsigned k = 0; k <= l; ++k) {
      Rational coeff = Rational(ipow(Int(2), l + k), double_factorial(2L * (k + l) - 1));
      coeff *= sign_pow(sign, l + k) * Rational(table.at(2 * l + 1, 2 * k));
      FactorMap factors{{expf, Rational(1)}};
      if (k > 0) factors.emplace(Atom::x(), Rational(2 * k));
      out.add_term(coeff, std::move(factors));
    }
  } else {
    const unsigned l = (n + 1) / 2;
    for (unsigned k = 0; k + 1 <= l; ++k) {
      Rational coeff = Rational(ipow(Int(2), l + k), double_factorial(2L * (k + l) - 1));
      coeff *= sign_pow(sign, l + k) * Rational(table.at(2 * l, 2 * k + 1));
      FactorMap factors{{expf, Rational(1)}, {Atom::x(), Rational(2 * k + 1)}};
      out.add_term(coeff, std::move(factors));
    }
  }
  return out;
}

ClosedFormExpr trig_sq_nth(bool is_sin, unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::trig_sq(is_sin), Rational(1)}});
    return out;
  }
  const CoeffTable table(n + 1);
  const Atom sin_atom = Atom::trig_sq(true);
  const Atom cos_atom = Atom::trig_sq(false);
  if (n % 2 == 0) {
    const unsigned l = n / 2;
    for (unsigned k = 0; k <= l; ++k) {
      const Rational coeff =
          Rational(ipow(Int(2), l + k) * table.at(2 * l + 1, 2 * k),
                   double_factorial(2L * (k + l) - 1));
      FactorMap factors;
      if (k > 0) factors.emplace(Atom::x(), Rational(2 * k));
      add_trig_term(out, coeff, std::move(factors), is_sin,
                    static_cast<long>(k + l), sin_atom, cos_atom, false);
    }
  } else {
    const unsigned l = (n + 1) / 2;
    for (unsigned k = 0; k + 1 <= l; ++k) {
      const Rational coeff =
          Rational(ipow(Int(2), l + k) * table.at(2 * l, 2 * k + 1),
                   double_factorial(2L * (k + l) - 1));
      FactorMap factors{{Atom::x(), Rational(2 * k + 1)}};
      add_trig_term(out, coeff, std::move(factors), is_sin,
                    static_cast<long>(k + l), sin_atom, cos_atom, false);
    }
  }
  return out;
}

ClosedFormExpr log_ratio_nth(unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::head_atom(Atom::HeadFn::LogRatio), Rational(1)}});
    return out;
  }
  const CoeffTable table(n < 2 ? 2 : n);
  if (n % 2 == 0) {
    const unsigned l = n / 2;
    for (unsigned k = 0; k <= l - 1; ++k) {
      const Rational coeff =
          Rational(2) * dfac_ratio(2L * (k + l)) * Rational(table.at(2 * l, 2 * k + 1));
      FactorMap factors{{Atom::x(), Rational(2 * k + 1)},
                        {Atom::one_minus_xsq(), Rational(-static_cast<long>(l + 1 + k))}};
      out.add_term(coeff, std::move(factors));
    }
  } else {
    const unsigned l = (n + 1) / 2;
    // The stated upper limit 2l-2 runs past the coefficient triangle; the
    // out-of-triangle entries are zero, leaving the proof's range k <= l-1.
    for (unsigned k = 0; k <= 2 * l - 2; ++k) {
      const Int& a = table.at(2 * l - 1, 2 * k);
      if (a == 0) continue;
      const Rational coeff = Rational(2) * dfac_ratio(2L * (k + l - 1)) * Rational(a);
      FactorMap factors{{Atom::one_minus_xsq(), Rational(-static_cast<long>(l + k))}};
      if (k > 0) factors.emplace(Atom::x(), Rational(2 * k));
      out.add_term(coeff, std::move(factors));
    }
  }
  return out;
}

ClosedFormExpr log_ratio_direct(unsigned n) {
  ClosedFormExpr out;
  if (n == 0) return log_ratio_nth(0);
  Rational c{factorial(n - 1)};
  if (n % 2 == 0) c = -c;  // (-1)^{n-1}
  out.add_term(c, {{Atom::x_plus_one(), Rational(-static_cast<long>(n))}});
  out.add_term(-c, {{Atom::x_minus_one(), Rational(-static_cast<long>(n))}});
  return out;
}

ClosedFormExpr log_one_minus_sq_direct(unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::head_atom(Atom::HeadFn::Log1mx2), Rational(1)}});
    return out;
  }
  Rational c{factorial(n - 1)};
  if (n % 2 == 0) c = -c;
  out.add_term(c, {{Atom::x_plus_one(), Rational(-static_cast<long>(n))}});
  out.add_term(c, {{Atom::x_minus_one(), Rational(-static_cast<long>(n))}});
  return out;
}

ClosedFormExpr log_one_plus_sq_nth(unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::head_atom(Atom::HeadFn::Log1px2), Rational(1)}});
    return out;
  }
  const CoeffTable table(n + 1);
  if (n % 2 == 0) {
    const unsigned l = n / 2;
    for (unsigned k = 0; k <= l; ++k) {
      Rational coeff = Rational(2 * double_factorial(2L * (k + l - 1)),
                                double_factorial(2L * (k + l) - 1));
      coeff *= sign_pow(-1, l - 1 + k) * Rational(table.at(2 * l + 1, 2 * k));
      FactorMap factors{{Atom::one_plus_xsq(), Rational(-static_cast<long>(l + k))}};
      if (k > 0) factors.emplace(Atom::x(), Rational(2 * k));
      out.add_term(coeff, std::move(factors));
    }
  } else {
    const unsigned l = (n + 1) / 2;
    for (unsigned k = 0; k + 1 <= l; ++k) {
      Rational coeff = Rational(2 * double_factorial(2L * (k + l - 1)),
                                double_factorial(2L * (k + l) - 1));
      coeff *= sign_pow(-1, l - 1 + k) * Rational(table.at(2 * l, 2 * k + 1));
      FactorMap factors{{Atom::x(), Rational(2 * k + 1)},
                        {Atom::one_plus_xsq(), Rational(-static_cast<long>(l + k))}};
      out.add_term(coeff, std::move(factors));
    }
  }
  return out;
}

ClosedFormExpr power_one_pm_sq_nth(int sign, const Rational& alpha, unsigned n) {
  if (is_integer(alpha) && alpha >= 0)
    throw std::invalid_argument("power_one_pm_sq_nth: alpha must lie outside {0} and N");
  const Atom base = sign > 0 ? Atom::one_plus_xsq() : Atom::one_minus_xsq();
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{base, alpha}});
    return out;
  }
  const CoeffTable table(n + 1);
  if (n % 2 == 0) {
    const unsigned l = n / 2;
    for (unsigned k = 0; k <= l; ++k) {
      Rational coeff = falling(alpha, k + l) *
                       Rational(ipow(Int(2), l + k), double_factorial(2L * (k + l) - 1));
      coeff *= sign_pow(sign, l + k) * Rational(table.at(2 * l + 1, 2 * k));
      FactorMap factors{{base, alpha - Rational(l + k)}};
      if (k > 0) factors.emplace(Atom::x(), Rational(2 * k));
      out.add_term(coeff, std::move(factors));
    }
  } else {
    const unsigned l = (n + 1) / 2;
    for (unsigned k = 0; k + 1 <= l; ++k) {
      Rational coeff = falling(alpha, k + l) *
                       Rational(ipow(Int(2), l + k), double_factorial(2L * (k + l) - 1));
      coeff *= sign_pow(sign, l + k) * Rational(table.at(2 * l, 2 * k + 1));
      FactorMap factors{{base, alpha - Rational(l + k)},
                        {Atom::x(), Rational(2 * k + 1)}};
      out.add_term(coeff, std::move(factors));
    }
  }
  return out;
}

BasisValue f_of_square_nth(const std::function<BasisValue(unsigned)>& f_derivs,
                           unsigned n, const Rational& x0) {
  if (n < 1) throw std::invalid_argument("f_of_square_nth: n must be >= 1");
  const CoeffTable table(n + 1);
  BasisValue total;
  if (n % 2 == 0) {
    const unsigned l = n / 2;
    for (unsigned k = 0; k <= l; ++k) {
      Rational w = Rational(ipow(Int(2), k + l) * table.at(2 * l + 1, 2 * k),
                            double_factorial(2L * (k + l) - 1));
      w *= qpow(x0, 2L * k);
      total += f_derivs(k + l).scaled(w);
    }
  } else {
    const unsigned l = (n + 1) / 2;
    for (unsigned k = 0; k + 1 <= l; ++k) {
      Rational w = Rational(ipow(Int(2), k + l) * table.at(2 * l, 2 * k + 1),
                            double_factorial(2L * (k + l) - 1));
      w *= qpow(x0, 2L * k + 1);
      total += f_derivs(k + l).scaled(w);
    }
  }
  return total;
}

ClosedFormExpr trig_exp_nth(bool is_sin, int sign, unsigned n) {
  ClosedFormExpr out;
  if (n == 0) {
    out.add_term(Rational(1), {{Atom::trig_expx(is_sin, sign), Rational(1)}});
    return out;
  }
  for (unsigned k = 1; k <= n; ++k) {
    Rational coeff{stirling2(n, k)};
    coeff *= sign_pow(sign, n);
    FactorMap factors{{Atom::exp_linx(sign), Rational(k)}};
    add_trig_term(out, coeff, std::move(factors), is_sin, static_cast<long>(k),
                  Atom::trig_expx(true, sign), Atom::trig_expx(false, sign), false);
  }
  return out;
}

namespace {

void check_open_unit_interval(const Rational& x0, const Rational&) {
  if (x0 <= -1 || x0 >= 1)
    throw std::domain_error("evaluation point outside the function's domain");
}

void check_nonzero(const Rational& x0, const Rational&) {
  if (x0 == 0) throw std::domain_error("evaluation at a pole");
}

void check_any(const Rational&, const Rational&) {}

// (1 - x^2)^alpha: inside the unit interval for fractional alpha, away from
// the zeros of the base otherwise.
void check_pow_minus(const Rational& x0, const Rational& alpha) {
  if (!is_integer(alpha)) {
    check_open_unit_interval(x0, alpha);
    return;
  }
  if (x0 == 1 || x0 == -1) throw std::domain_error("evaluation at a pole");
}

std::vector<FamilyInfo> make_registry() {
  auto no_alpha = [](ClosedFormExpr (*f)(unsigned)) {
    return [f](unsigned n, const Rational&) { return f(n); };
  };
  std::vector<FamilyInfo> families;
  families.push_back({"arcsin", false, no_alpha(&arcsin_nth), check_open_unit_interval});
  families.push_back({"arccos", false, no_alpha(&arccos_nth), check_open_unit_interval});
  families.push_back({"invsqrt1mx2", false, no_alpha(&inv_sqrt_one_minus_sq_nth),
                      check_open_unit_interval});
  families.push_back({"tan", false, no_alpha(&tan_nth), check_any});
  families.push_back({"cot", false, no_alpha(&cot_nth), check_nonzero});
  families.push_back({"arctan", false, no_alpha(&arctan_nth), check_any});
  families.push_back(
      {"exp_recip_plus", false,
       [](unsigned n, const Rational&) { return exp_recip_nth(+1, n); }, check_nonzero});
  families.push_back(
      {"exp_recip_minus", false,
       [](unsigned n, const Rational&) { return exp_recip_nth(-1, n); }, check_nonzero});
  families.push_back(
      {"exp_sq_plus", false,
       [](unsigned n, const Rational&) { return exp_sq_nth(+1, n); }, check_any});
  families.push_back(
      {"exp_sq_minus", false,
       [](unsigned n, const Rational&) { return exp_sq_nth(-1, n); }, check_any});
  families.push_back(
      {"sin_sq", false,
       [](unsigned n, const Rational&) { return trig_sq_nth(true, n); }, check_any});
  families.push_back(
      {"cos_sq", false,
       [](unsigned n, const Rational&) { return trig_sq_nth(false, n); }, check_any});
  families.push_back(
      {"log_ratio", false, no_alpha(&log_ratio_nth), check_open_unit_interval});
  families.push_back(
      {"log_1px2", false, no_alpha(&log_one_plus_sq_nth), check_any});
  families.push_back({"log_1mx2", false, no_alpha(&log_one_minus_sq_direct),
                      check_open_unit_interval});
  families.push_back(
      {"pow_1px2", true,
       [](unsigned n, const Rational& alpha) { return power_one_pm_sq_nth(+1, alpha, n); },
       check_any});
  families.push_back(
      {"pow_1mx2", true,
       [](unsigned n, const Rational& alpha) { return power_one_pm_sq_nth(-1, alpha, n); },
       check_pow_minus});
  families.push_back(
      {"sin_exp_plus", false,
       [](unsigned n, const Rational&) { return trig_exp_nth(true, +1, n); }, check_any});
  families.push_back(
      {"sin_exp_minus", false,
       [](unsigned n, const Rational&) { return trig_exp_nth(true, -1, n); }, check_any});
  families.push_back(
      {"cos_exp_plus", false,
       [](unsigned n, const Rational&) { return trig_exp_nth(false, +1, n); }, check_any});
  families.push_back(
      {"cos_exp_minus", false,
       [](unsigned n, const Rational&) { return trig_exp_nth(false, -1, n); }, check_any});
  return families;
}

}  // namespace

const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> registry = make_registry();
  return registry;
}

const FamilyInfo* find_family(std::string_view name) {
  for (const auto& f : family_registry())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace derivkit
