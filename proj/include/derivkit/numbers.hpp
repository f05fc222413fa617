#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace derivkit {

// All scalar arithmetic in the library is exact. Int is an arbitrary-precision
// integer; Rational is kept in lowest terms with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::string to_string(const Int& v);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

// Accepts "P" or "P/Q" with optional leading minus; Q must be nonzero.
std::optional<Rational> parse_rational(std::string_view text);

// base^e for a nonnegative integer exponent.
Int ipow(Int base, unsigned e);

// base^e for any integer exponent; base must be nonzero when e < 0.
Rational qpow(const Rational& base, long e);

// Largest integer <= q.
Int floor_of(const Rational& q);

// q - floor(q), in [0, 1).
Rational frac_part(const Rational& q);

}  // namespace derivkit
