#ifndef WEYLELL_VERIFY_HPP
#define WEYLELL_VERIFY_HPP

#include <string>
#include <vector>

#include "weylell/cartan.hpp"

namespace weylell {

enum class CheckStatus { pass, fail, skipped, finding };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

/// Limits that decide which invariant suites run for a given type.
struct VerifyOptions {
  Count group_cap = 2'000;         ///< full group table, posets, star
  Count orbit_cap = 200'000;       ///< orbit expansion
  Count box_cap = 5'000'000;       ///< brute-force box scan
  Count word_search_cap = 400;     ///< exhaustive reduced-word search
  int random_points = 200;
  int threads = 1;
};

/// Runs every invariant suite applicable at the scale of `cd`.
std::vector<CheckResult> run_verification(const CartanData& cd, const VerifyOptions& options = {});

/// Published orbit counts that the enumeration is compared against.
inline constexpr Count kPublishedE8OrbitCount = 157;

}  // namespace weylell

#endif  // WEYLELL_VERIFY_HPP
