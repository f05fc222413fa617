#include "derivkit/numbers.hpp"

#include <stdexcept>

namespace derivkit {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rational(Int(std::string(text)));
    }
    const auto ns = text.substr(0, slash);
    const auto ds = text.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) return std::nullopt;
    Int n{std::string(ns)};
    Int d{std::string(ds)};
    if (d == 0) return std::nullopt;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Int ipow(Int base, unsigned e) {
  Int result{1};
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Rational qpow(const Rational& base, long e) {
  if (e >= 0) {
    return Rational(ipow(num(base), static_cast<unsigned>(e)),
                    ipow(den(base), static_cast<unsigned>(e)));
  }
  if (base == 0) throw std::domain_error("qpow: zero base with negative exponent");
  Int n = ipow(den(base), static_cast<unsigned>(-e));
  Int d = ipow(num(base), static_cast<unsigned>(-e));
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

Int floor_of(const Rational& q) {
  Int quotient = num(q) / den(q);
  if (num(q) < 0 && quotient * den(q) != num(q)) --quotient;
  return quotient;
}

Rational frac_part(const Rational& q) { return q - Rational(floor_of(q)); }

}  // namespace derivkit
