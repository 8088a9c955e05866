#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "smotzkin/path.hpp"

namespace smotzkin {

enum class PathViolation : std::uint8_t {
  NotNonnegative,
  NotClosed,
  WrongStepCounts,
  BadInitialBlock,
  BadFlatUpAlternation,
  DownTooEarly,
};

std::string_view to_string(PathViolation violation);

/// Validation outcome; carries the first violated condition when invalid.
struct PathClassReport {
  std::optional<PathViolation> violation;

  bool is_valid() const noexcept { return !violation.has_value(); }

  static PathClassReport ok() { return {}; }
  static PathClassReport fail(PathViolation v) { return {v}; }
};

/// True iff every prefix height is >= 0 and the final height is 0.
bool is_motzkin(const Path& path);

/// Checks the t-generalized S-Motzkin conditions, reporting the first one
/// violated, in this fixed order:
///   (a) Motzkin (nonnegative, closed),
///   (b) length t*n with (t-2)n flats and n of each of up/down,
///   (c) the flat/up subsequence reads (F^(t-2) U)^n,
///   (d) the k-th down comes after the k-th up.
/// Condition (d) is implied by (a) but is stated separately in the class
/// definition; enforce_down_rule=false skips it so the redundancy can be
/// probed. Requires t >= 2. The empty path is valid for every t.
PathClassReport classify_smotzkin(const Path& path, int t,
                                  bool enforce_down_rule = true);

bool is_smotzkin(const Path& path, int t);

/// Thrown by conversions that require a valid S-Motzkin path.
class InvalidPathError : public std::invalid_argument {
 public:
  explicit InvalidPathError(PathClassReport report);

  const PathClassReport& report() const noexcept { return report_; }

 private:
  PathClassReport report_;
};

}  // namespace smotzkin
