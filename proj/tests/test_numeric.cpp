#include "derivkit/numeric.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>

using namespace derivkit;

namespace {
double as_double(const std::string& rendered) { return std::strtod(rendered.c_str(), nullptr); }
}  // namespace

TEST_CASE("numeric rendering of rationals and symbols") {
  CHECK(as_double(render_numeric(BasisValue::scalar(Rational(9, 4)), 64)) ==
        doctest::Approx(2.25).epsilon(1e-15));

  BasisValue e;
  e.add_exp(Rational(1, 2), Rational(3));
  CHECK(as_double(render_numeric(e, 128)) ==
        doctest::Approx(3.0 * std::exp(0.5)).epsilon(1e-12));

  BasisValue mixed;
  mixed.add_sin(Rational(1, 5), Rational(1));
  mixed.add_cos(Rational(1, 5), Rational(-2));
  mixed.add_pow(Rational(8, 9), Rational(1, 2), Rational(1, 3));
  const double expect =
      std::sin(0.2) - 2 * std::cos(0.2) + std::sqrt(8.0 / 9.0) / 3.0;
  CHECK(as_double(render_numeric(mixed, 128)) ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("numeric rendering divides out the trig prefactor") {
  Evaluation ev;
  ev.value = BasisValue::scalar(Rational(1));
  ev.divisor = Symbol{Symbol::Kind::Cos, Rational(1, 5), Rational(0)};
  ev.divisor_power = 2;
  const double expect = 1.0 / (std::cos(0.2) * std::cos(0.2));
  CHECK(as_double(render_numeric(ev, 128)) == doctest::Approx(expect).epsilon(1e-12));
}
