#pragma once

#include "derivkit/numbers.hpp"

#include <vector>

namespace derivkit {

// Triangular coefficient family a_{m,k} generating the arcsine-derivative
// expansions. Entries exist exactly for 0 <= k < m with m - k odd; every
// other lookup inside the built range returns 0 by convention. The table is
// built strictly from the seeds a_{1,0} = a_{2,1} = 1 and the five
// differentiation recurrences, and is the canonical source of a_{m,k}
// throughout the library.
class CoeffTable {
 public:
  explicit CoeffTable(unsigned max_m);

  unsigned max_m() const { return max_m_; }

  // a_{m,k}, with the zero convention for out-of-triangle (m, k).
  // Requires 1 <= m <= max_m.
  const Int& at(unsigned m, long k) const;

  // A fresh table covering at least new_max_m rows.
  CoeffTable extended(unsigned new_max_m) const;

 private:
  unsigned max_m_;
  // rows_[m-1][j] holds a_{m, k} for the j-th stored k of row m
  // (k = 2j+1 on even rows, k = 2j on odd rows).
  std::vector<std::vector<Int>> rows_;
};

inline CoeffTable build_table(unsigned max_m) { return CoeffTable(max_m); }

// Closed bands of the triangle, each equal to the corresponding table entry:
// a_{k+1,k} = (2k-1)!!
Int band_k_plus_1(unsigned k);
// a_{k+3,k} = (2k+1)!! (k+1)(k+2)/2
Int band_k_plus_3(unsigned k);
// a_{k+5,k} = (2k+3)!! (k+1)(k+2)(k+3)(k+4)/8
Int band_k_plus_5(unsigned k);

// The general closed form as published: (m+k-2)!! (m-1)! / (2^{m-k-2} k!),
// for m >= k+2 >= 3. Returned as an exact rational because it is *not*
// integral for every odd gap m - k >= 7; it agrees with the table only for
// gaps 3 and 5 (where 2^{m-k-2} = (m-k-1)!!). Kept as an as-published
// comparator for the verifier's discrepancy report.
Rational paper_closed_form(unsigned m, unsigned k);

// Repaired closed form (m+k-2)!! (m-1)! / ((m-k-1)!! k!); agrees with the
// recurrence-built table on every stored entry. Requires m >= k+1 and
// m - k odd.
Int corrected_closed_form(unsigned m, unsigned k);

}  // namespace derivkit
