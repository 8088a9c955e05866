#include "smotzkin/path.hpp"

namespace smotzkin {

std::optional<Step> step_from_char(char c) {
  switch (c) {
    case 'F': return Step::Flat;
    case 'U': return Step::Up;
    case 'D': return Step::Down;
    default: return std::nullopt;
  }
}

Path parse_path(std::string_view text) {
  Path path;
  path.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto step = step_from_char(text[i]);
    if (!step) {
      throw ParseError("invalid character '" + std::string(1, text[i]) +
                           "' at index " + std::to_string(i),
                       i);
    }
    path.push_back(*step);
  }
  return path;
}

std::string format_path(const Path& path) {
  std::string text;
  text.reserve(path.size());
  for (const Step s : path) text.push_back(step_char(s));
  return text;
}

std::vector<std::int64_t> height_profile(const Path& path) {
  std::vector<std::int64_t> heights(path.size() + 1, 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    heights[i + 1] = heights[i] + height_delta(path[i]);
  }
  return heights;
}

}  // namespace smotzkin
