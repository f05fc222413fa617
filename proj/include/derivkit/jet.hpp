#pragma once

#include "derivkit/numbers.hpp"

#include <vector>

namespace derivkit {

// Truncated Taylor series over exact rationals: coefficient j is
// f^(j)(x0) / j! for the represented function about the expansion point.
class Jet {
 public:
  explicit Jet(std::size_t order) : c_(order + 1, Rational(0)) {}
  Jet(std::size_t order, const Rational& constant) : Jet(order) { c_[0] = constant; }

  static Jet variable(std::size_t order, const Rational& x0);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t j) const { return c_[j]; }
  Rational& operator[](std::size_t j) { return c_[j]; }

  bool is_zero() const;

  Jet operator-() const;
  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  // Requires b[0] != 0.
  friend Jet operator/(const Jet& a, const Jet& b);
  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }

  Jet scaled(const Rational& c) const;
  Jet pow_int(long e) const;  // negative e requires nonzero constant term

  // n! * coefficient n.
  Rational derivative(unsigned n) const;

 private:
  std::vector<Rational> c_;
};

// d/dx of the series; the result is one order shorter.
Jet jet_derivative(const Jet& u);
// Antiderivative with the given constant term; one order longer.
Jet jet_integrate(const Jet& u, const Rational& constant);

// Elementary series. exp/sin/cos require a zero constant term; log and
// rational powers require constant term exactly 1 (callers factor the
// constant onto the symbol basis first).
Jet jet_exp(const Jet& u);
void jet_sin_cos(const Jet& u, Jet& sin_out, Jet& cos_out);
Jet jet_log(const Jet& u);
Jet jet_pow(const Jet& u, const Rational& alpha);
// Requires a constant term that is the square of a rational.
Jet jet_sqrt(const Jet& u);

}  // namespace derivkit
