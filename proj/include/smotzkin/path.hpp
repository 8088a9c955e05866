#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smotzkin {

/// One lattice-path step: flat (height delta 0), up (+1), or down (-1).
enum class Step : std::uint8_t { Flat, Up, Down };

constexpr int height_delta(Step s) {
  switch (s) {
    case Step::Flat: return 0;
    case Step::Up: return 1;
    default: return -1;
  }
}

constexpr char step_char(Step s) {
  switch (s) {
    case Step::Flat: return 'F';
    case Step::Up: return 'U';
    default: return 'D';
  }
}

std::optional<Step> step_from_char(char c);

/// A path is a raw step sequence; class membership is checked by the
/// predicates in validate.hpp.
using Path = std::vector<Step>;

/// Thrown when text input cannot be decoded; index() is the first bad
/// position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t index)
      : std::runtime_error(message), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Decodes a word over {F,U,D}; case-sensitive, no whitespace.
Path parse_path(std::string_view text);

std::string format_path(const Path& path);

/// Heights h(0..L) with h(0)=0 and h(i)=h(i-1)+delta(step i).
std::vector<std::int64_t> height_profile(const Path& path);

}  // namespace smotzkin
