#include "derivkit/bell.hpp"

#include "derivkit/coeff_table.hpp"
#include "derivkit/combinatorics.hpp"

#include <cassert>
#include <stdexcept>

namespace derivkit {

namespace {

// Extends the partial profile over part sizes i = size..1, with `weight`
// and `parts` still to place.
void enumerate_profiles(unsigned size, unsigned weight, unsigned parts,
                        std::vector<unsigned>& profile, BellPoly& out) {
  if (size == 1) {
    // l_1 is forced: all remaining parts have size 1.
    if (weight != parts) return;
    profile[0] = parts;
    Int denom{1};
    for (unsigned i = 0; i < profile.size(); ++i) {
      denom *= factorial(profile[i]);
      denom *= ipow(factorial(i + 1), profile[i]);
    }
    const Int numer = factorial(out.n);
    assert(numer % denom == 0);
    out.terms.emplace(profile, numer / denom);
    profile[0] = 0;
    return;
  }
  const unsigned max_l = std::min(weight / size, parts);
  for (unsigned l = 0; l <= max_l; ++l) {
    const unsigned rest_weight = weight - l * size;
    const unsigned rest_parts = parts - l;
    // Remaining parts have sizes in [1, size-1].
    if (rest_weight < rest_parts || rest_weight > rest_parts * (size - 1)) continue;
    profile[size - 1] = l;
    enumerate_profiles(size - 1, rest_weight, rest_parts, profile, out);
    profile[size - 1] = 0;
  }
}

}  // namespace

BellPoly bell_general(unsigned n, unsigned k) {
  if (k < 1 || k > n) throw std::invalid_argument("bell_general: need 1 <= k <= n");
  BellPoly p;
  p.n = n;
  p.k = k;
  std::vector<unsigned> profile(n - k + 1, 0);
  enumerate_profiles(n - k + 1, n, k, profile, p);
  return p;
}

Rational bell_evaluate(const BellPoly& p, std::span<const Rational> args) {
  const std::size_t need = p.n - p.k + 1;
  if (args.size() < need)
    throw std::invalid_argument("bell_evaluate: too few arguments");
  Rational sum{0};
  for (const auto& [profile, coeff] : p.terms) {
    Rational monomial{coeff};
    for (std::size_t i = 0; i < profile.size(); ++i) {
      for (unsigned e = 0; e < profile[i]; ++e) monomial *= args[i];
    }
    sum += monomial;
  }
  return sum;
}

ScaleWitness bell_scale(const BellPoly& p, const Rational& a, const Rational& b,
                        std::span<const Rational> args) {
  const std::size_t need = p.n - p.k + 1;
  if (args.size() < need)
    throw std::invalid_argument("bell_scale: too few arguments");
  std::vector<Rational> scaled(need);
  Rational factor = a;  // a * b^i for x_i
  for (std::size_t i = 0; i < need; ++i) {
    factor *= b;
    scaled[i] = factor * args[i];
  }
  ScaleWitness w;
  w.scaled_arguments_eval = bell_evaluate(p, scaled);
  w.scaled_original_eval =
      qpow(a, p.k) * qpow(b, p.n) * bell_evaluate(p, args);
  return w;
}

UnivariateMonomialForm bell_special(unsigned n, unsigned k) {
  if (k < 1 || k > n) throw std::invalid_argument("bell_special: need 1 <= k <= n");
  const long power = 2L * k - n;
  if (power < 0 || (power == 0 && n % 2 == 1)) return {Rational(0), 0};
  const CoeffTable table(n + 1);
  const Int& a = table.at(n + 1, power);
  return {Rational(a, double_factorial(2L * k - 1)), static_cast<unsigned>(power)};
}

Int bell_ones(unsigned n, unsigned k) {
  const BellPoly p = bell_general(n, k);
  Int sum{0};
  for (const auto& [profile, coeff] : p.terms) sum += coeff;
  return sum;
}

std::string to_string(const BellPoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [profile, coeff] : p.terms) {
    if (!first) out += " + ";
    first = false;
    out += coeff.str();
    for (std::size_t i = 0; i < profile.size(); ++i) {
      if (profile[i] == 0) continue;
      out += "*x" + std::to_string(i + 1);
      if (profile[i] > 1) out += "^" + std::to_string(profile[i]);
    }
  }
  return out;
}

}  // namespace derivkit
