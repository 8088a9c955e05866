#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smotzkin/path.hpp"

namespace smotzkin {

/// Unit move along one axis of Z^3.
enum class Move : std::uint8_t { X, Y, Z };

constexpr char move_char(Move m) {
  switch (m) {
    case Move::X: return 'X';
    case Move::Y: return 'Y';
    default: return 'Z';
  }
}

using Walk = std::vector<Move>;

Walk parse_walk(std::string_view text);
std::string format_walk(const Walk& walk);

/// The confining region: 0 <= z <= y <= x <= y+1.
constexpr bool omega_contains(std::int64_t x, std::int64_t y, std::int64_t z) {
  return 0 <= z && z <= y && y <= x && x <= y + 1;
}

/// Index of the first move whose endpoint leaves the region, if any.
/// The starting point (0,0,0) is inside by definition.
std::optional<std::size_t> first_omega_violation(const Walk& walk);

bool is_in_omega(const Walk& walk);

/// True iff the walk stays inside the region and ends on the diagonal
/// (n,n,n), i.e. it is one of the allowed frog walks.
bool is_valid_frog_walk(const Walk& walk);

/// Positional relabeling X -> F, Y -> U, Z -> D.
Path walk_to_path(const Walk& walk);

/// Inverse relabeling F -> X, U -> Y, D -> Z.
Walk path_to_walk(const Path& path);

}  // namespace smotzkin
