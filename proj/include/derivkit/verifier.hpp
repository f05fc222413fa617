#pragma once

#include "derivkit/numbers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace derivkit {

// Outcome of one cross-check. known-discrepancy is reserved for the
// registered divergence between the as-published closed form of a_{m,k} and
// the recurrence table at odd gaps m-k >= 7; every other mismatch is a fail.
enum class CheckStatus { Pass, Fail, KnownDiscrepancy };

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::Pass;
  std::string lhs;
  std::string rhs;
  std::string location;
};

enum class Suite { All, Coeffs, Bell, Trig, Exp, Log, Power, Stirling };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);
std::string_view status_name(CheckStatus s);

inline constexpr std::uint64_t kDefaultSeed = 20140320;

struct Report {
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckResult> results;  // sorted by check_id
  unsigned pass = 0;
  unsigned fail = 0;
  unsigned known = 0;
};

// Runs every check of the suite up to max_order. Deterministic: results are
// sorted by check_id and randomized property cases derive entirely from the
// seed.
Report run_suite(Suite suite, unsigned max_order, std::uint64_t seed = kDefaultSeed);

// Canonical JSON rendering (stable key order, no whitespace); byte-identical
// across runs with equal inputs.
std::string report_json(const Report& report);
std::string report_text(const Report& report);

}  // namespace derivkit
