#include "smotzkin/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace smotzkin {

namespace detail {

Decomposition decompose_unchecked(const Path& m) {
  assert(!m.empty());
  const std::size_t len = m.size();
  std::vector<std::int64_t> h(len + 1, 0);
  for (std::size_t i = 0; i < len; ++i) h[i + 1] = h[i] + height_delta(m[i]);

  // penultimate return: the last height-0 point strictly before the end.
  // h(1) = 0 because a valid path opens with a flat, so p >= 1.
  std::size_t p = len - 1;
  while (h[p] != 0) --p;
  assert(p >= 1);
  assert(m[p] == Step::Up);
  assert(m[len - 1] == Step::Down);

  Path c(m.begin() + static_cast<std::ptrdiff_t>(p) + 1, m.end() - 1);

  // x: the last flat before the penultimate return (step 0 is a flat)
  std::size_t xpos = p;
  do {
    --xpos;
  } while (m[xpos] != Step::Flat);

  // y: the leftmost flat at x's height from which the path reaches x
  // without dipping below that height; x itself when none exists
  const std::int64_t floor_height = h[xpos];
  std::int64_t min_height = floor_height;
  std::size_t ypos = xpos;
  for (std::size_t j = xpos; j-- > 0;) {
    min_height = std::min(min_height, h[j]);
    if (min_height < floor_height) break;
    if (m[j] == Step::Flat && h[j] == floor_height) ypos = j;
  }

  Path a(m.begin() + static_cast<std::ptrdiff_t>(ypos),
         m.begin() + static_cast<std::ptrdiff_t>(xpos));
  Path b;
  b.reserve(ypos + (p - xpos - 1));
  b.insert(b.end(), m.begin(), m.begin() + static_cast<std::ptrdiff_t>(ypos));
  b.insert(b.end(), m.begin() + static_cast<std::ptrdiff_t>(xpos) + 1,
           m.begin() + static_cast<std::ptrdiff_t>(p));

  assert(a.size() + b.size() + c.size() == len - 3);
  return Decomposition{std::move(a), std::move(b), std::move(c), ypos};
}

namespace {

// index just past the last up step; 0 when there is none
std::size_t b_split_point(const Path& b) {
  for (std::size_t i = b.size(); i-- > 0;) {
    if (b[i] == Step::Up) return i + 1;
  }
  return 0;
}

}  // namespace

Path compose_unchecked(const Path& a, const Path& b, const Path& c) {
  const std::size_t split = b_split_point(b);
  Path out;
  out.reserve(a.size() + b.size() + c.size() + 3);
  out.insert(out.end(), b.begin(),
             b.begin() + static_cast<std::ptrdiff_t>(split));
  out.insert(out.end(), a.begin(), a.end());
  out.push_back(Step::Flat);
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(split),
             b.end());
  out.push_back(Step::Up);
  out.insert(out.end(), c.begin(), c.end());
  out.push_back(Step::Down);
  return out;
}

}  // namespace detail

namespace {

void require_smotzkin3(const Path& path) {
  const auto report = classify_smotzkin(path, 3);
  if (!report.is_valid()) throw InvalidPathError(report);
}

}  // namespace

Decomposition decompose(const Path& m) {
  if (m.empty()) throw std::invalid_argument("cannot decompose an empty path");
  require_smotzkin3(m);
  Decomposition d = detail::decompose_unchecked(m);
  assert(is_smotzkin(d.a, 3));
  assert(is_smotzkin(d.b, 3));
  assert(is_smotzkin(d.c, 3));
  return d;
}

std::pair<Path, Path> split_b(const Path& b) {
  const std::size_t split = detail::b_split_point(b);
  return {Path(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(split)),
          Path(b.begin() + static_cast<std::ptrdiff_t>(split), b.end())};
}

Path compose(const Path& a, const Path& b, const Path& c) {
  require_smotzkin3(a);
  require_smotzkin3(b);
  require_smotzkin3(c);
  Path out = detail::compose_unchecked(a, b, c);
  assert(is_smotzkin(out, 3));
  return out;
}

TAryTree path_to_tree(const Path& m) {
  require_smotzkin3(m);
  TAryTree tree(3);
  if (m.empty()) return tree;

  struct Task {
    Path path;
    std::int32_t parent;
    int slot;
  };
  std::vector<Task> work;
  work.push_back({m, TAryTree::kNoNode, 0});
  while (!work.empty()) {
    Task task = std::move(work.back());
    work.pop_back();
    Decomposition d = detail::decompose_unchecked(task.path);
    assert(is_smotzkin(d.a, 3));
    assert(is_smotzkin(d.b, 3));
    assert(is_smotzkin(d.c, 3));
    const std::int32_t node = tree.add_node();
    if (task.parent != TAryTree::kNoNode) {
      tree.set_child(task.parent, task.slot, node);
    }
    // pushed right to left so the left subtree is numbered first (preorder)
    if (!d.c.empty()) work.push_back({std::move(d.c), node, 2});
    if (!d.b.empty()) work.push_back({std::move(d.b), node, 1});
    if (!d.a.empty()) work.push_back({std::move(d.a), node, 0});
  }
  assert(tree.size() * 3 == m.size());
  return tree;
}

Path tree_to_path(const TAryTree& tree) {
  if (tree.arity() != 3) {
    throw std::invalid_argument("path conversion requires arity 3");
  }
  if (tree.empty()) return {};

  // children before parents: two-phase traversal with an explicit stack
  std::vector<Path> built(tree.size());
  struct Frame {
    std::int32_t node;
    bool expanded;
  };
  std::vector<Frame> stack{{tree.root(), false}};
  while (!stack.empty()) {
    const auto [node, expanded] = stack.back();
    stack.pop_back();
    if (!expanded) {
      stack.push_back({node, true});
      for (int slot = 0; slot < 3; ++slot) {
        const auto child = tree.child(node, slot);
        if (child != TAryTree::kNoNode) stack.push_back({child, false});
      }
    } else {
      const auto part = [&](int slot) -> Path {
        const auto child = tree.child(node, slot);
        return child == TAryTree::kNoNode ? Path{} : std::move(built[child]);
      };
      built[node] = detail::compose_unchecked(part(0), part(1), part(2));
    }
  }

  Path out = std::move(built[tree.root()]);
  assert(out.size() == tree.size() * 3);
  assert(is_smotzkin(out, 3));
  return out;
}

}  // namespace smotzkin
