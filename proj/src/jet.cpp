#include "derivkit/jet.hpp"

#include "derivkit/combinatorics.hpp"

#include <stdexcept>

namespace derivkit {

Jet Jet::variable(std::size_t order, const Rational& x0) {
  Jet j(order, x0);
  if (order >= 1) j[1] = 1;
  return j;
}

bool Jet::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

Jet Jet::operator-() const {
  Jet out(order());
  for (std::size_t j = 0; j <= order(); ++j) out[j] = -c_[j];
  return out;
}

Jet operator+(const Jet& a, const Jet& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Jet out(n);
  for (std::size_t j = 0; j <= n; ++j) out[j] = a[j] + b[j];
  return out;
}

Jet operator-(const Jet& a, const Jet& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Jet out(n);
  for (std::size_t j = 0; j <= n; ++j) out[j] = a[j] - b[j];
  return out;
}

Jet operator*(const Jet& a, const Jet& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Jet out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b[0] == 0) throw std::domain_error("jet division by series with zero constant term");
  const std::size_t n = std::min(a.order(), b.order());
  Jet out(n);
  for (std::size_t j = 0; j <= n; ++j) {
    Rational acc = a[j];
    for (std::size_t i = 0; i < j; ++i) acc -= out[i] * b[j - i];
    out[j] = acc / b[0];
  }
  return out;
}

Jet Jet::scaled(const Rational& c) const {
  Jet out(order());
  for (std::size_t j = 0; j <= order(); ++j) out[j] = c_[j] * c;
  return out;
}

Jet Jet::pow_int(long e) const {
  Jet acc(order(), Rational(1));
  Jet base = *this;
  bool invert = e < 0;
  unsigned long ee = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (ee != 0) {
    if (ee & 1ul) acc = acc * base;
    base = base * base;
    ee >>= 1ul;
  }
  if (invert) return Jet(order(), Rational(1)) / acc;
  return acc;
}

Rational Jet::derivative(unsigned n) const {
  if (n > order()) throw std::invalid_argument("Jet::derivative: order too high");
  return c_[n] * Rational(factorial(n));
}

Jet jet_derivative(const Jet& u) {
  if (u.order() == 0) return Jet(0);
  Jet out(u.order() - 1);
  for (std::size_t j = 0; j + 1 <= u.order(); ++j) out[j] = u[j + 1] * Rational(j + 1);
  return out;
}

Jet jet_integrate(const Jet& u, const Rational& constant) {
  Jet out(u.order() + 1, constant);
  for (std::size_t j = 0; j <= u.order(); ++j) out[j + 1] = u[j] / Rational(j + 1);
  return out;
}

Jet jet_exp(const Jet& u) {
  if (u[0] != 0) throw std::domain_error("jet_exp: nonzero constant term");
  const std::size_t n = u.order();
  Jet w(n, Rational(1));
  for (std::size_t j = 1; j <= n; ++j) {
    Rational acc{0};
    for (std::size_t i = 1; i <= j; ++i) acc += Rational(i) * u[i] * w[j - i];
    w[j] = acc / Rational(j);
  }
  return w;
}

void jet_sin_cos(const Jet& u, Jet& sin_out, Jet& cos_out) {
  if (u[0] != 0) throw std::domain_error("jet_sin_cos: nonzero constant term");
  const std::size_t n = u.order();
  Jet s(n), c(n, Rational(1));
  for (std::size_t j = 1; j <= n; ++j) {
    Rational sa{0}, ca{0};
    for (std::size_t i = 1; i <= j; ++i) {
      sa += Rational(i) * u[i] * c[j - i];
      ca += Rational(i) * u[i] * s[j - i];
    }
    s[j] = sa / Rational(j);
    c[j] = -ca / Rational(j);
  }
  sin_out = s;
  cos_out = c;
}

Jet jet_log(const Jet& u) {
  if (u[0] != 1) throw std::domain_error("jet_log: constant term must be 1");
  const std::size_t n = u.order();
  Jet w(n);
  for (std::size_t j = 1; j <= n; ++j) {
    Rational acc = Rational(j) * u[j];
    for (std::size_t i = 1; i < j; ++i) acc -= Rational(i) * w[i] * u[j - i];
    w[j] = acc / Rational(j);
  }
  return w;
}

Jet jet_pow(const Jet& u, const Rational& alpha) {
  if (u[0] != 1) throw std::domain_error("jet_pow: constant term must be 1");
  const std::size_t n = u.order();
  Jet w(n, Rational(1));
  for (std::size_t j = 1; j <= n; ++j) {
    // j w_j = sum_{i=1..j} (alpha i - (j - i)) u_i w_{j-i}
    Rational acc{0};
    for (std::size_t i = 1; i <= j; ++i)
      acc += (alpha * Rational(i) - Rational(j - i)) * u[i] * w[j - i];
    w[j] = acc / Rational(j);
  }
  return w;
}

Jet jet_sqrt(const Jet& u) {
  if (u[0] == 0) throw std::domain_error("jet_sqrt: zero constant term");
  const Int np = num(u[0]);
  const Int dp = den(u[0]);
  if (np < 0) throw std::domain_error("jet_sqrt: negative constant term");
  const Int ns = sqrt(np);
  const Int ds = sqrt(dp);
  if (ns * ns != np || ds * ds != dp)
    throw std::domain_error("jet_sqrt: constant term is not a rational square");
  const std::size_t n = u.order();
  Jet w(n, Rational(ns, ds));
  for (std::size_t j = 1; j <= n; ++j) {
    Rational acc = u[j];
    for (std::size_t i = 1; i < j; ++i) acc -= w[i] * w[j - i];
    w[j] = acc / (Rational(2) * w[0]);
  }
  return w;
}

}  // namespace derivkit
