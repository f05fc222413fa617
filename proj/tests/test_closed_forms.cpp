#include "derivkit/closed_forms.hpp"

#include "derivkit/oracle.hpp"

#include <doctest.h>

using namespace derivkit;

namespace {

ClosedFormExpr expr_of(std::initializer_list<std::pair<Rational, FactorMap>> terms) {
  ClosedFormExpr e;
  for (const auto& [c, f] : terms) e.add_term(c, f);
  return e;
}

BasisValue eval_value(const ClosedFormExpr& e, const Rational& x0) {
  const Evaluation ev = evaluate_at(e, x0);
  REQUIRE_FALSE(ev.divisor.has_value());
  return ev.value;
}

}  // namespace

TEST_CASE("shifted sine and cosine") {
  CHECK(sincos_nth(true, 0) ==
        expr_of({{1, {{Atom::trig_linx(true, 1), 1}}}}));
  CHECK(sincos_nth(true, 2) ==
        expr_of({{-1, {{Atom::trig_linx(true, 1), 1}}}}));
  CHECK(sincos_nth(false, 5) ==
        expr_of({{-1, {{Atom::trig_linx(true, 1), 1}}}}));
  CHECK(sincos_nth(true, 1) == sincos_nth(false, 0));
}

TEST_CASE("tangent and cotangent low orders") {
  // tan' = 1/cos^2
  CHECK(tan_nth(1) == expr_of({{1, {{Atom::trig_linx(false, 1), -2}}}}));
  // cot' = -1/sin^2
  CHECK(cot_nth(1) == expr_of({{-1, {{Atom::trig_linx(true, 1), -2}}}}));
  // tan'' = 2 sin x / cos^3 x
  CHECK(tan_nth(2) == expr_of({{2,
                                {{Atom::trig_linx(true, 1), 1},
                                 {Atom::trig_linx(false, 1), -3}}}}));
  // tan''' = (4 - 2 cos 2x) / cos^4 x
  CHECK(tan_nth(3) == expr_of({{4, {{Atom::trig_linx(false, 1), -4}}},
                               {-2,
                                {{Atom::trig_linx(false, 2), 1},
                                 {Atom::trig_linx(false, 1), -4}}}}));
  // cot''' = (-4 - 2 cos 2x) / sin^4 x
  CHECK(cot_nth(3) == expr_of({{-4, {{Atom::trig_linx(true, 1), -4}}},
                               {-2,
                                {{Atom::trig_linx(false, 2), 1},
                                 {Atom::trig_linx(true, 1), -4}}}}));
}

TEST_CASE("tangent and cotangent against the derivative-polynomial route") {
  const Rational pt(1, 5);
  for (unsigned n = 1; n <= 15; ++n) {
    const Evaluation t = evaluate_at(tan_nth(n), pt);
    REQUIRE(t.divisor.has_value());
    CHECK(t.divisor->kind == Symbol::Kind::Cos);
    CHECK(t.divisor_power == n + 1);
    CHECK(t.value == tan_nth_cleared(n, pt));

    const Evaluation c = evaluate_at(cot_nth(n), pt);
    REQUIRE(c.divisor.has_value());
    CHECK(c.divisor->kind == Symbol::Kind::Sin);
    CHECK(c.divisor_power == n + 1);
    CHECK(c.value == cot_nth_cleared(n, pt));
  }
}

TEST_CASE("tangent at the origin gives the tangent numbers") {
  // odd derivatives: 1, 2, 16, 272; even derivatives vanish
  const Rational tangent_numbers[] = {1, 2, 16, 272};
  for (unsigned i = 0; i < 4; ++i) {
    const Evaluation ev = evaluate_at(tan_nth(2 * i + 1), Rational(0));
    CHECK_FALSE(ev.divisor.has_value());  // cos(0) folds away
    CHECK(ev.value == BasisValue::scalar(tangent_numbers[i]));
  }
  for (unsigned n = 2; n <= 8; n += 2)
    CHECK(evaluate_at(tan_nth(n), Rational(0)).value.is_zero());
  CHECK_THROWS_AS(evaluate_at(cot_nth(1), Rational(0)), std::domain_error);
}

TEST_CASE("exp of reciprocal argument") {
  CHECK(exp_recip_nth(+1, 1) ==
        expr_of({{-1, {{Atom::exp_recip(+1), 1}, {Atom::t(), -2}}}}));
  CHECK(exp_recip_nth(+1, 2) ==
        expr_of({{1, {{Atom::exp_recip(+1), 1}, {Atom::t(), -4}}},
                 {2, {{Atom::exp_recip(+1), 1}, {Atom::t(), -3}}}}));
  // (-,3) at t = 1 is a rational multiple of e^{-1}
  const BasisValue v = eval_value(exp_recip_nth(-1, 3), Rational(1));
  REQUIRE(v.terms().size() == 1);
  CHECK(v.terms().begin()->first.kind == Symbol::Kind::Exp);
  CHECK(v.terms().begin()->first.p1 == Rational(-1));
  CHECK_THROWS_AS(evaluate_at(exp_recip_nth(+1, 2), Rational(0)), std::domain_error);
}

TEST_CASE("arcsine derivatives") {
  CHECK(arcsin_nth(1) == expr_of({{1, {{Atom::one_minus_xsq(), Rational(-1, 2)}}}}));
  CHECK(arcsin_nth(4) ==
        expr_of({{9, {{Atom::x(), 1}, {Atom::one_minus_xsq(), Rational(-5, 2)}}},
                 {15, {{Atom::x(), 3}, {Atom::one_minus_xsq(), Rational(-7, 2)}}}}));
  CHECK(arcsin_nth(5) ==
        expr_of({{9, {{Atom::one_minus_xsq(), Rational(-5, 2)}}},
                 {90, {{Atom::x(), 2}, {Atom::one_minus_xsq(), Rational(-7, 2)}}},
                 {105, {{Atom::x(), 4}, {Atom::one_minus_xsq(), Rational(-9, 2)}}}}));
}

TEST_CASE("arcsine relatives") {
  for (unsigned n = 1; n <= 30; ++n) {
    CHECK(arccos_nth(n) == arcsin_nth(n).negated());
    CHECK(arcsin_nth_unified(n) == arcsin_nth(n));
    if (n <= 29) CHECK(inv_sqrt_one_minus_sq_nth(n) == arcsin_nth(n + 1));
  }
  CHECK(inv_sqrt_one_minus_sq_nth(1) ==
        expr_of({{1, {{Atom::x(), 1}, {Atom::one_minus_xsq(), Rational(-3, 2)}}}}));
  // arccos(6) at 1/2 is the negated arcsin(6) value
  const BasisValue a = eval_value(arcsin_nth(6), Rational(1, 2));
  const BasisValue c = eval_value(arccos_nth(6), Rational(1, 2));
  CHECK(a == c.scaled(Rational(-1)));
  // shift identity at a point
  CHECK(eval_value(inv_sqrt_one_minus_sq_nth(7), Rational(2, 5)) ==
        eval_value(arcsin_nth(8), Rational(2, 5)));
  CHECK_THROWS_AS(evaluate_at(arcsin_nth(3), Rational(2)), std::domain_error);
}

TEST_CASE("arctangent derivatives") {
  CHECK(arctan_nth(1) == expr_of({{1, {{Atom::one_plus_xsq(), -1}}}}));
  CHECK(arctan_nth(2) ==
        expr_of({{-2, {{Atom::x(), 1}, {Atom::one_plus_xsq(), -2}}}}));
  // rational everywhere; n = 5 at 1/2 against the series
  const FuncPtr f = fx::arctan(fx::var());
  const BasisValue lhs = eval_value(arctan_nth(5), Rational(1, 2));
  CHECK(lhs == nth_derivative_via_jet(*f, Rational(1, 2), 5));
  CHECK(lhs.is_rational());
}

TEST_CASE("exp of squared argument") {
  CHECK(exp_sq_nth(+1, 1) ==
        expr_of({{2, {{Atom::x(), 1}, {Atom::exp_sq(+1), 1}}}}));
  CHECK(exp_sq_nth(+1, 2) ==
        expr_of({{2, {{Atom::exp_sq(+1), 1}}},
                 {4, {{Atom::x(), 2}, {Atom::exp_sq(+1), 1}}}}));
  // (e^{x^2})'' at 1/2 = 3 e^{1/4}
  BasisValue expect;
  expect.add_exp(Rational(1, 4), Rational(3));
  CHECK(eval_value(exp_sq_nth(+1, 2), Rational(1, 2)) == expect);
}

TEST_CASE("trig of squared argument") {
  CHECK(trig_sq_nth(true, 1) ==
        expr_of({{2, {{Atom::x(), 1}, {Atom::trig_sq(false), 1}}}}));
  CHECK(trig_sq_nth(true, 2) ==
        expr_of({{2, {{Atom::trig_sq(false), 1}}},
                 {-4, {{Atom::x(), 2}, {Atom::trig_sq(true), 1}}}}));
  // (cos(x^2))'''' at 1/3 against the series, exact on {sin(1/9), cos(1/9)}
  const FuncPtr x = fx::var();
  const FuncPtr f = fx::cos(fx::mul(x, x));
  CHECK(eval_value(trig_sq_nth(false, 4), Rational(1, 3)) ==
        nth_derivative_via_jet(*f, Rational(1, 3), 4));
}

TEST_CASE("log families") {
  CHECK(log_ratio_nth(1) == expr_of({{2, {{Atom::one_minus_xsq(), -1}}}}));
  CHECK(log_ratio_nth(2) ==
        expr_of({{4, {{Atom::x(), 1}, {Atom::one_minus_xsq(), -2}}}}));
  CHECK(log_ratio_direct(1) == expr_of({{1, {{Atom::x_plus_one(), -1}}},
                                        {-1, {{Atom::x_minus_one(), -1}}}}));
  CHECK(log_one_minus_sq_direct(1) == expr_of({{1, {{Atom::x_plus_one(), -1}}},
                                               {1, {{Atom::x_minus_one(), -1}}}}));
  // log_ratio_direct(4) at 1/2
  const BasisValue direct = eval_value(log_ratio_direct(4), Rational(1, 2));
  const Rational expect = Rational(-6) * (qpow(Rational(3, 2), -4) - qpow(Rational(-1, 2), -4));
  CHECK(direct == BasisValue::scalar(expect));
  CHECK(direct == eval_value(log_ratio_nth(4), Rational(1, 2)));
  for (unsigned n = 1; n <= 20; ++n)
    CHECK(eval_value(log_ratio_nth(n), Rational(1, 3)) ==
          eval_value(log_ratio_direct(n), Rational(1, 3)));

  CHECK(log_one_plus_sq_nth(1) ==
        expr_of({{2, {{Atom::x(), 1}, {Atom::one_plus_xsq(), -1}}}}));
  CHECK(log_one_plus_sq_nth(2) ==
        expr_of({{2, {{Atom::one_plus_xsq(), -1}}},
                 {-4, {{Atom::x(), 2}, {Atom::one_plus_xsq(), -2}}}}));
}

TEST_CASE("powers of 1 +- x^2") {
  CHECK(power_one_pm_sq_nth(-1, Rational(-1, 2), 1) == inv_sqrt_one_minus_sq_nth(1));
  for (unsigned n = 1; n <= 15; ++n) {
    const BasisValue lhs =
        eval_value(power_one_pm_sq_nth(-1, Rational(-1, 2), n), Rational(1, 3));
    CHECK(lhs == eval_value(inv_sqrt_one_minus_sq_nth(n), Rational(1, 3)));
  }
  // sqrt(1 + x^2): second derivative at 0 is 1
  CHECK(eval_value(power_one_pm_sq_nth(+1, Rational(1, 2), 2), Rational(0)) ==
        BasisValue::scalar(Rational(1)));
  // (1-x^2)^(-1/2) sixth derivative continues the arcsine family
  CHECK(eval_value(power_one_pm_sq_nth(-1, Rational(-1, 2), 6), Rational(1, 3)) ==
        eval_value(arcsin_nth(7), Rational(1, 3)));
  CHECK_THROWS_AS(power_one_pm_sq_nth(+1, Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(power_one_pm_sq_nth(+1, Rational(3), 1), std::invalid_argument);
  CHECK_NOTHROW(power_one_pm_sq_nth(+1, Rational(-2), 1));
}

TEST_CASE("generic f(x^2) derivatives") {
  // f = identity: h = x^2, h'' = 2 everywhere
  const auto identity_derivs = [](unsigned j) {
    BasisValue v;
    if (j == 0) throw std::logic_error("unused");
    if (j == 1) v.add_unit(Rational(1));
    return v;
  };
  CHECK(f_of_square_nth(identity_derivs, 2, Rational(7, 3)) ==
        BasisValue::scalar(Rational(2)));
  CHECK(f_of_square_nth(identity_derivs, 3, Rational(7, 3)).is_zero());

  // f = square: h = x^4, h'''' = 24
  const Rational x0(-5, 7);
  const Rational u0 = x0 * x0;
  const auto square_derivs = [&u0](unsigned j) {
    BasisValue v;
    if (j == 0) v.add_unit(u0 * u0);
    if (j == 1) v.add_unit(Rational(2) * u0);
    if (j == 2) v.add_unit(Rational(2));
    return v;
  };
  CHECK(f_of_square_nth(square_derivs, 4, x0) == BasisValue::scalar(Rational(24)));
  CHECK(f_of_square_nth(square_derivs, 1, x0) ==
        BasisValue::scalar(Rational(4) * qpow(x0, 3)));

  // f = exp reproduces the e^{x^2} family
  BasisValue expu;
  expu.add_exp(Rational(1, 4), Rational(1));
  const auto exp_derivs = [&expu](unsigned) { return expu; };
  CHECK(f_of_square_nth(exp_derivs, 3, Rational(1, 2)) ==
        eval_value(exp_sq_nth(+1, 3), Rational(1, 2)));
}

TEST_CASE("trig of exponential argument") {
  CHECK(trig_exp_nth(true, +1, 1) ==
        expr_of({{1, {{Atom::trig_expx(false, +1), 1}, {Atom::exp_linx(+1), 1}}}}));
  CHECK(trig_exp_nth(true, +1, 2) ==
        expr_of({{1, {{Atom::trig_expx(false, +1), 1}, {Atom::exp_linx(+1), 1}}},
                 {-1, {{Atom::trig_expx(true, +1), 1}, {Atom::exp_linx(+1), 2}}}}));
  // (cos(e^{-x}))''' at 0: coefficients on {sin 1, cos 1} against the series
  const FuncPtr f = fx::cos(fx::exp(fx::neg(fx::var())));
  CHECK(eval_value(trig_exp_nth(false, -1, 3), Rational(0)) ==
        nth_derivative_via_jet(*f, Rational(0), 3));
}

TEST_CASE("order zero returns the undifferentiated expression") {
  CHECK(arcsin_nth(0) ==
        expr_of({{1, {{Atom::head_atom(Atom::HeadFn::Arcsin), 1}}}}));
  CHECK(inv_sqrt_one_minus_sq_nth(0) ==
        expr_of({{1, {{Atom::one_minus_xsq(), Rational(-1, 2)}}}}));
  CHECK(power_one_pm_sq_nth(+1, Rational(1, 2), 0) ==
        expr_of({{1, {{Atom::one_plus_xsq(), Rational(1, 2)}}}}));
  CHECK(exp_sq_nth(-1, 0) == expr_of({{1, {{Atom::exp_sq(-1), 1}}}}));
  // and the derivative-shift property holds from order 0 upward
  const FuncPtr x = fx::var();
  const FuncPtr f = fx::log(fx::add(fx::constant(Rational(1)), fx::mul(x, x)));
  for (unsigned n = 0; n <= 6; ++n) {
    const BasisValue lhs = eval_value(log_one_plus_sq_nth(n), Rational(1, 4));
    CHECK(lhs == nth_derivative_via_jet(*f, Rational(1, 4), n));
  }
}

TEST_CASE("family registry") {
  CHECK(find_family("arcsin") != nullptr);
  CHECK(find_family("pow_1mx2")->takes_alpha);
  CHECK(find_family("nope") == nullptr);
  CHECK(family_registry().size() == 21);
  CHECK_THROWS_AS(find_family("arcsin")->check_domain(Rational(2), Rational(0)),
                  std::domain_error);
}
