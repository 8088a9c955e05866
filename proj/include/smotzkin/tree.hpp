#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smotzkin/path.hpp"

namespace smotzkin {

/// Rooted ordered tree in which every node has exactly arity() child slots,
/// empty slots explicit. Only shapes matter: nodes carry no labels.
///
/// Nodes live in a flat array in preorder; kNoNode marks an empty slot.
class TAryTree {
 public:
  static constexpr std::int32_t kNoNode = -1;

  /// Empty tree of the given arity. Requires arity >= 2.
  explicit TAryTree(int arity = 3);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept {
    return slots_.size() / static_cast<std::size_t>(arity_);
  }
  bool empty() const noexcept { return slots_.empty(); }

  std::int32_t root() const noexcept { return empty() ? kNoNode : 0; }
  std::int32_t child(std::int32_t node, int slot) const;

  // Builder surface. The first node added becomes the root; callers keep the
  // structure a tree (each node referenced by at most one slot).
  std::int32_t add_node();
  void set_child(std::int32_t parent, int slot, std::int32_t node);
  void remove_last_node();

  /// Structural equality; arity must match too.
  friend bool operator==(const TAryTree& a, const TAryTree& b);

 private:
  int arity_;
  std::vector<std::int32_t> slots_;
};

/// Grammar: tree := "." | "(" tree^arity ")". Total parse; trailing input,
/// foreign characters, and child-count mismatches raise ParseError with the
/// offending position. Requires arity >= 2.
TAryTree parse_tree(std::string_view text, int arity);

/// Canonical encoding, inverse of parse_tree. The empty tree is ".".
std::string format_tree(const TAryTree& tree);

}  // namespace smotzkin
