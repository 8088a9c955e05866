#include "smotzkin/bigcount.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

namespace smotzkin {

BigCount::BigCount(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
    value /= kBase;
  }
}

void BigCount::multiply(std::uint64_t factor) {
  if (factor == 0) {
    limbs_.clear();
    return;
  }
  unsigned __int128 carry = 0;
  for (auto& limb : limbs_) {
    carry += static_cast<unsigned __int128>(limb) * factor;
    limb = static_cast<std::uint32_t>(carry % kBase);
    carry /= kBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
}

std::uint64_t BigCount::divide(std::uint64_t divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  unsigned __int128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    rem = rem * kBase + limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(rem / divisor);
    rem %= divisor;
  }
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  return static_cast<std::uint64_t>(rem);
}

std::optional<std::uint64_t> BigCount::to_uint64() const {
  unsigned __int128 value = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    value = value * kBase + limbs_[i];
    if (value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(value);
}

std::string BigCount::to_string() const {
  if (limbs_.empty()) return "0";
  std::string out = std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string digits = std::to_string(limbs_[i]);
    out.append(9 - digits.size(), '0');
    out += digits;
  }
  return out;
}

}  // namespace smotzkin
