#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace smotzkin {

/// Exact nonnegative integer of arbitrary size. Supports just what the
/// counting formulas need: multiply and divide by machine words.
class BigCount {
 public:
  BigCount() = default;  // zero
  explicit BigCount(std::uint64_t value);

  bool is_zero() const noexcept { return limbs_.empty(); }

  void multiply(std::uint64_t factor);

  /// In-place quotient; returns the remainder. divisor must be nonzero.
  std::uint64_t divide(std::uint64_t divisor);

  /// The value if it fits in 64 bits.
  std::optional<std::uint64_t> to_uint64() const;

  std::string to_string() const;

  friend bool operator==(const BigCount&, const BigCount&) = default;

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000;

  // base-1e9 limbs, little-endian, no trailing zero limbs
  std::vector<std::uint32_t> limbs_;
};

}  // namespace smotzkin
