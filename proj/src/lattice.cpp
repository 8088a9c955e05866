#include "smotzkin/lattice.hpp"

namespace smotzkin {

namespace {

std::optional<Move> move_from_char(char c) {
  switch (c) {
    case 'X': return Move::X;
    case 'Y': return Move::Y;
    case 'Z': return Move::Z;
    default: return std::nullopt;
  }
}

}  // namespace

Walk parse_walk(std::string_view text) {
  Walk walk;
  walk.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto move = move_from_char(text[i]);
    if (!move) {
      throw ParseError("invalid character '" + std::string(1, text[i]) +
                           "' at index " + std::to_string(i),
                       i);
    }
    walk.push_back(*move);
  }
  return walk;
}

std::string format_walk(const Walk& walk) {
  std::string text;
  text.reserve(walk.size());
  for (const Move m : walk) text.push_back(move_char(m));
  return text;
}

std::optional<std::size_t> first_omega_violation(const Walk& walk) {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    switch (walk[i]) {
      case Move::X: ++x; break;
      case Move::Y: ++y; break;
      case Move::Z: ++z; break;
    }
    if (!omega_contains(x, y, z)) return i;
  }
  return std::nullopt;
}

bool is_in_omega(const Walk& walk) {
  return !first_omega_violation(walk).has_value();
}

bool is_valid_frog_walk(const Walk& walk) {
  if (!is_in_omega(walk)) return false;
  std::size_t x = 0;
  std::size_t y = 0;
  for (const Move m : walk) {
    if (m == Move::X) {
      ++x;
    } else if (m == Move::Y) {
      ++y;
    }
  }
  const std::size_t z = walk.size() - x - y;
  return x == y && y == z;
}

Path walk_to_path(const Walk& walk) {
  Path path;
  path.reserve(walk.size());
  for (const Move m : walk) {
    switch (m) {
      case Move::X: path.push_back(Step::Flat); break;
      case Move::Y: path.push_back(Step::Up); break;
      case Move::Z: path.push_back(Step::Down); break;
    }
  }
  return path;
}

Walk path_to_walk(const Path& path) {
  Walk walk;
  walk.reserve(path.size());
  for (const Step s : path) {
    switch (s) {
      case Step::Flat: walk.push_back(Move::X); break;
      case Step::Up: walk.push_back(Move::Y); break;
      case Step::Down: walk.push_back(Move::Z); break;
    }
  }
  return walk;
}

}  // namespace smotzkin
