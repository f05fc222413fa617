#include "derivkit/jet.hpp"

#include "derivkit/basis_jet.hpp"
#include "derivkit/combinatorics.hpp"

#include <doctest.h>

#include <random>

using namespace derivkit;

namespace {
Jet make(std::initializer_list<Rational> cs) {
  Jet j(cs.size() - 1);
  std::size_t i = 0;
  for (const auto& c : cs) j[i++] = c;
  return j;
}
}  // namespace

TEST_CASE("geometric series from division") {
  const Jet one_plus = make({1, 1, 0, 0});
  const Jet one_minus = make({1, -1, 0, 0});
  const Jet q = one_plus / one_minus;
  CHECK(q == make({1, 2, 2, 2}));
}

TEST_CASE("sqrt of an exact square") {
  CHECK(jet_sqrt(make({9, 0, 0})) == make({3, 0, 0}));
  CHECK(jet_sqrt(make({Rational(9, 4), 0})) == make({Rational(3, 2), 0}));
  CHECK_THROWS_AS(jet_sqrt(make({2, 0})), std::domain_error);
  CHECK_THROWS_AS(jet_sqrt(make({0, 1})), std::domain_error);
}

TEST_CASE("binomial series of (1 - x^2)^(-1/2)") {
  Jet u(4, Rational(1));
  u[2] = -1;  // 1 - x^2 about 0
  const Jet w = jet_pow(u, Rational(-1, 2));
  CHECK(w == make({1, 0, Rational(1, 2), 0, Rational(3, 8)}));
}

TEST_CASE("exponential series") {
  const Jet x = Jet::variable(4, Rational(0));
  const Jet e = jet_exp(x);
  CHECK(e == make({1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
  CHECK_THROWS_AS(jet_exp(make({1, 1})), std::domain_error);
}

TEST_CASE("sine and cosine series") {
  const Jet x = Jet::variable(5, Rational(0));
  Jet s(5), c(5);
  jet_sin_cos(x, s, c);
  CHECK(s == make({0, 1, 0, Rational(-1, 6), 0, Rational(1, 120)}));
  CHECK(c == make({1, 0, Rational(-1, 2), 0, Rational(1, 24), 0}));
}

TEST_CASE("log series") {
  Jet u(4, Rational(1));
  u[1] = 1;  // 1 + x
  const Jet w = jet_log(u);
  CHECK(w == make({0, 1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4)}));
  CHECK_THROWS_AS(jet_log(make({2, 1})), std::domain_error);
}

TEST_CASE("division by a zero constant term is singular") {
  CHECK_THROWS_AS(make({1, 0}) / make({0, 1}), std::domain_error);
}

TEST_CASE("derivative and integral shift coefficients") {
  const Jet u = make({5, 4, 3, 2});
  const Jet d = jet_derivative(u);
  CHECK(d == make({4, 6, 6}));
  const Jet back = jet_integrate(d, Rational(5));
  CHECK(back == u);
}

TEST_CASE("arcsine jet about zero has the squared double-factorial law") {
  const BasisJet x = BasisJet::variable(13, Rational(0));
  const BasisJet a = bj_arcsin(x);
  REQUIRE(a.pure_unit());  // arcsin(0) = 0, no symbolic parts at the origin
  const Jet series = a.unit_jet();
  for (unsigned j = 0; 2 * j + 1 <= 13; ++j) {
    const Int numer = double_factorial(2L * j - 1) * double_factorial(2L * j - 1);
    CHECK(series[2 * j + 1] == Rational(numer, factorial(2 * j + 1)));
    if (2 * j <= 13) CHECK(series[2 * j] == 0);
  }
}

TEST_CASE("basis jets factor transcendental constants onto symbols") {
  // exp about 1/2: e^{1/2} carried symbolically with a rational tail.
  const BasisJet x = BasisJet::variable(3, Rational(1, 2));
  const BasisJet e = bj_exp(x);
  REQUIRE(e.parts().size() == 1);
  const Symbol s = e.parts().begin()->first;
  CHECK(s.kind == Symbol::Kind::Exp);
  CHECK(s.p1 == Rational(1, 2));
  CHECK(e.parts().begin()->second ==
        make({1, 1, Rational(1, 2), Rational(1, 6)}));

  // sin(u0 + v) = sin(u0) cos(v) + cos(u0) sin(v)
  const BasisJet sj = bj_sin(x);
  REQUIRE(sj.parts().size() == 2);
  BasisValue first = sj.derivative(1);
  BasisValue expected;
  expected.add_cos(Rational(1, 2), Rational(1));
  CHECK(first == expected);
}

TEST_CASE("symbol products reduce onto the closed basis") {
  BasisValue sin_a, cos_a, exp_a;
  sin_a.add_sin(Rational(1, 5), Rational(1));
  cos_a.add_cos(Rational(1, 5), Rational(1));
  exp_a.add_exp(Rational(2), Rational(1));

  // sin^2 + cos^2 = 1
  BasisValue pyth = sin_a * sin_a + cos_a * cos_a;
  CHECK(pyth == BasisValue::scalar(Rational(1)));

  // sin a cos a = sin(2a)/2
  BasisValue double_angle;
  double_angle.add_sin(Rational(2, 5), Rational(1, 2));
  CHECK(sin_a * cos_a == double_angle);

  // e^2 e^2 = e^4
  BasisValue e4;
  e4.add_exp(Rational(4), Rational(1));
  CHECK(exp_a * exp_a == e4);

  // sqrt(8/9) * sqrt(8/9) = 8/9
  BasisValue r;
  r.add_pow(Rational(8, 9), Rational(1, 2), Rational(1));
  CHECK(r * r == BasisValue::scalar(Rational(8, 9)));

  // and negative angles fold into signs
  BasisValue neg;
  neg.add_sin(Rational(-1, 5), Rational(1));
  CHECK(neg == sin_a.scaled(Rational(-1)));
}

TEST_CASE("series functional equations on random jets") {
  std::mt19937_64 rng(11);
  auto coeff = [&rng]() {
    return Rational(static_cast<long>(rng() % 9) - 4,
                    1 + static_cast<long>(rng() % 3));
  };
  for (int trial = 0; trial < 25; ++trial) {
    Jet u(8), v(8);
    for (std::size_t j = 1; j <= 8; ++j) {
      u[j] = coeff();
      v[j] = coeff();
    }

    // exp(u + v) = exp(u) exp(v)
    CHECK(jet_exp(u + v) == jet_exp(u) * jet_exp(v));

    // sin^2 + cos^2 = 1
    Jet s(8), c(8);
    jet_sin_cos(u, s, c);
    CHECK(s * s + c * c == Jet(8, Rational(1)));

    // log(exp(u)) = u
    Jet e = jet_exp(u);
    CHECK(jet_log(e) == u);

    // u^a u^b = u^{a+b} around constant term 1
    Jet w = u;
    w[0] = 1;
    const Rational a(3, 2), b(-1, 2);
    CHECK(jet_pow(w, a) * jet_pow(w, b) == jet_pow(w, a + b));

    // angle addition at the series level
    Jet sv(8), cv(8);
    jet_sin_cos(v, sv, cv);
    Jet s_sum(8), c_sum(8);
    jet_sin_cos(u + v, s_sum, c_sum);
    CHECK(s_sum == s * cv + c * sv);
    CHECK(c_sum == c * cv - s * sv);
  }
}

TEST_CASE("pow symbols normalize exponents into (0,1)") {
  BasisValue a;
  a.add_pow(Rational(8, 9), Rational(-5, 2), Rational(1));
  BasisValue b;
  b.add_pow(Rational(8, 9), Rational(1, 2), qpow(Rational(8, 9), -3));
  CHECK(a == b);
}
