#include "derivkit/coeff_table.hpp"

#include "derivkit/combinatorics.hpp"

#include <cassert>
#include <stdexcept>

namespace derivkit {

namespace {
const Int kZero{0};
}

CoeffTable::CoeffTable(unsigned max_m) : max_m_(max_m) {
  if (max_m < 2) throw std::invalid_argument("CoeffTable: max_m must be >= 2");
  rows_.resize(max_m);
  rows_[0] = {Int(1)};  // a_{1,0}
  rows_[1] = {Int(1)};  // a_{2,1}
  for (unsigned m = 3; m <= max_m; ++m) {
    if (m % 2 == 0) {
      // Row 2K holds a_{2K, 2i+1} for i = 0..K-1.
      const unsigned K = m / 2;
      std::vector<Int> row(K);
      for (unsigned i = 0; i + 1 < K; ++i) {
        row[i] = Int(2 * (i + 1)) * at(m - 1, 2 * (i + 1)) +
                 Int(2 * K + 2 * i - 1) * at(m - 1, 2 * i);
      }
      row[K - 1] = Int(4 * K - 3) * at(m - 1, 2 * K - 2);
      rows_[m - 1] = std::move(row);
    } else {
      // Row 2K+1 holds a_{2K+1, 2i} for i = 0..K.
      const unsigned K = (m - 1) / 2;
      std::vector<Int> row(K + 1);
      row[0] = at(m - 1, 1);
      for (unsigned i = 1; i + 1 <= K; ++i) {
        row[i] = Int(2 * i + 1) * at(m - 1, 2 * i + 1) +
                 Int(2 * K + 2 * i - 1) * at(m - 1, 2 * i - 1);
      }
      row[K] = Int(4 * K - 1) * at(m - 1, 2 * K - 1);
      rows_[m - 1] = std::move(row);
    }
  }
}

const Int& CoeffTable::at(unsigned m, long k) const {
  if (m < 1 || m > max_m_) throw std::out_of_range("CoeffTable::at: row outside built range");
  if (k < 0 || static_cast<unsigned long>(k) >= m) return kZero;
  if ((m - static_cast<unsigned>(k)) % 2 == 0) return kZero;
  const unsigned j = (m % 2 == 0) ? (static_cast<unsigned>(k) - 1) / 2
                                  : static_cast<unsigned>(k) / 2;
  return rows_[m - 1][j];
}

CoeffTable CoeffTable::extended(unsigned new_max_m) const {
  return CoeffTable(std::max(new_max_m, max_m_));
}

Int band_k_plus_1(unsigned k) { return double_factorial(2L * k - 1); }

Int band_k_plus_3(unsigned k) {
  return double_factorial(2L * k + 1) * Int(k + 1) * Int(k + 2) / 2;
}

Int band_k_plus_5(unsigned k) {
  return double_factorial(2L * k + 3) * Int(k + 1) * Int(k + 2) * Int(k + 3) * Int(k + 4) / 8;
}

Rational paper_closed_form(unsigned m, unsigned k) {
  if (k < 1 || m < k + 2)
    throw std::invalid_argument("paper_closed_form: need m >= k+2 >= 3");
  const Int numer = double_factorial(static_cast<long>(m) + k - 2) * factorial(m - 1);
  const Int denom = ipow(Int(2), m - k - 2) * factorial(k);
  return Rational(numer, denom);
}

Int corrected_closed_form(unsigned m, unsigned k) {
  if (m < k + 1 || (m - k) % 2 == 0)
    throw std::invalid_argument("corrected_closed_form: need m >= k+1 with m-k odd");
  const Int numer = double_factorial(static_cast<long>(m) + k - 2) * factorial(m - 1);
  const Int denom = double_factorial(static_cast<long>(m) - k - 1) * factorial(k);
  assert(numer % denom == 0);
  return numer / denom;
}

}  // namespace derivkit
