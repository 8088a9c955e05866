#include "smotzkin/tree.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace smotzkin {

TAryTree::TAryTree(int arity) : arity_(arity) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
}

std::int32_t TAryTree::child(std::int32_t node, int slot) const {
  assert(node >= 0 && static_cast<std::size_t>(node) < size());
  assert(slot >= 0 && slot < arity_);
  return slots_[static_cast<std::size_t>(node) * arity_ + slot];
}

std::int32_t TAryTree::add_node() {
  const auto index = static_cast<std::int32_t>(size());
  slots_.insert(slots_.end(), static_cast<std::size_t>(arity_), kNoNode);
  return index;
}

void TAryTree::set_child(std::int32_t parent, int slot, std::int32_t node) {
  assert(parent >= 0 && static_cast<std::size_t>(parent) < size());
  assert(slot >= 0 && slot < arity_);
  slots_[static_cast<std::size_t>(parent) * arity_ + slot] = node;
}

void TAryTree::remove_last_node() {
  assert(!empty());
  slots_.resize(slots_.size() - static_cast<std::size_t>(arity_));
}

bool operator==(const TAryTree& a, const TAryTree& b) {
  if (a.arity_ != b.arity_ || a.size() != b.size()) return false;
  std::vector<std::pair<std::int32_t, std::int32_t>> stack{
      {a.root(), b.root()}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    if ((x == TAryTree::kNoNode) != (y == TAryTree::kNoNode)) return false;
    if (x == TAryTree::kNoNode) continue;
    for (int slot = 0; slot < a.arity_; ++slot) {
      stack.emplace_back(a.child(x, slot), b.child(y, slot));
    }
  }
  return true;
}

TAryTree parse_tree(std::string_view text, int arity) {
  TAryTree tree(arity);

  const auto error = [](const std::string& what, std::size_t at) {
    return ParseError(what + " at index " + std::to_string(at), at);
  };

  struct Frame {
    std::int32_t node;
    int filled;
  };
  std::vector<Frame> open;
  std::size_t i = 0;
  bool root_parsed = false;

  while (!root_parsed) {
    if (i == text.size()) throw error("unexpected end of input", i);
    const char c = text[i];
    if (c == '.') {
      if (open.empty()) {
        ++i;  // the whole tree is empty
        break;
      }
      tree.set_child(open.back().node, open.back().filled++, TAryTree::kNoNode);
      ++i;
    } else if (c == '(') {
      const auto node = tree.add_node();
      if (!open.empty()) {
        tree.set_child(open.back().node, open.back().filled++, node);
      }
      open.push_back({node, 0});
      ++i;
      continue;  // children follow
    } else if (c == ')') {
      throw error("child count mismatch", i);
    } else {
      throw error("unexpected character '" + std::string(1, c) + "'", i);
    }

    // close every node that just received its last child
    while (!open.empty() && open.back().filled == arity) {
      if (i == text.size()) throw error("unexpected end of input", i);
      if (text[i] != ')') {
        if (text[i] == '(' || text[i] == '.') {
          throw error("child count mismatch", i);
        }
        throw error("unexpected character '" + std::string(1, text[i]) + "'",
                    i);
      }
      ++i;
      open.pop_back();
      if (open.empty()) root_parsed = true;
    }
  }

  if (i != text.size()) throw error("trailing input", i);
  return tree;
}

std::string format_tree(const TAryTree& tree) {
  if (tree.empty()) return ".";
  constexpr std::int32_t kClose = -2;
  std::string out;
  std::vector<std::int32_t> stack{tree.root()};
  while (!stack.empty()) {
    const std::int32_t item = stack.back();
    stack.pop_back();
    if (item == kClose) {
      out.push_back(')');
    } else if (item == TAryTree::kNoNode) {
      out.push_back('.');
    } else {
      out.push_back('(');
      stack.push_back(kClose);
      for (int slot = tree.arity(); slot-- > 0;) {
        stack.push_back(tree.child(item, slot));
      }
    }
  }
  return out;
}

}  // namespace smotzkin
