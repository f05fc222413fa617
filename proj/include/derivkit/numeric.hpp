#pragma once

#include "derivkit/expr.hpp"

#include <string>

namespace derivkit {

// Floating rendering of an exact evaluation at the requested precision
// (mpfr, round-to-nearest). Display only; never used by any verification
// path. Returns a decimal string.
std::string render_numeric(const Evaluation& value, unsigned bits);

std::string render_numeric(const BasisValue& value, unsigned bits);

}  // namespace derivkit
