#include "smotzkin/combinat.hpp"

#include <cassert>
#include <limits>

#include "smotzkin/lattice.hpp"

namespace smotzkin {

BigCount count_paths(std::uint64_t n, std::uint64_t t) {
  if (t < 2) throw std::invalid_argument("arity must be at least 2");
  if (n != 0 && t > std::numeric_limits<std::uint64_t>::max() / n) {
    throw std::overflow_error("t*n does not fit in 64 bits");
  }
  const std::uint64_t total = t * n;

  // running value is C(total - n + i, i) after step i, so each division by i
  // is exact; the final Fuss-Catalan division is exact as well
  BigCount count(1);
  for (std::uint64_t i = 1; i <= n; ++i) {
    count.multiply(total - n + i);
    const std::uint64_t rem = count.divide(i);
    assert(rem == 0);
    (void)rem;
  }
  const std::uint64_t rem = count.divide((t - 1) * n + 1);
  if (rem != 0) throw std::logic_error("inexact Fuss-Catalan division");
  return count;
}

namespace {

void check_enumeration_bound(std::uint64_t n, std::uint64_t t,
                             std::size_t max_length) {
  if (t < 2) throw std::invalid_argument("arity must be at least 2");
  if (n != 0 && (t > max_length / n || t * n > max_length)) {
    throw BoundExceededError("enumeration bound exceeded: t*n = " +
                             std::to_string(t) + "*" + std::to_string(n) +
                             " > " + std::to_string(max_length));
  }
}

class PathEnumerator {
 public:
  PathEnumerator(std::uint64_t n, std::uint64_t t,
                 const std::function<void(const Path&)>& yield)
      : yield_(yield),
        flats_left_((t - 2) * n),
        ups_left_(n),
        downs_left_(n),
        block_size_(t - 2) {
    current_.reserve(static_cast<std::size_t>(t * n));
  }

  void run() { extend(); }

 private:
  // try D, then F, then U: ascending lexicographic output (D < F < U)
  void extend() {
    if (flats_left_ == 0 && ups_left_ == 0 && downs_left_ == 0) {
      yield_(current_);
      return;
    }
    if (downs_left_ > 0 && height_ > 0) {
      --downs_left_;
      --height_;
      current_.push_back(Step::Down);
      extend();
      current_.pop_back();
      ++height_;
      ++downs_left_;
    }
    if (flats_left_ > 0 && block_fill_ < block_size_) {
      --flats_left_;
      ++block_fill_;
      current_.push_back(Step::Flat);
      extend();
      current_.pop_back();
      --block_fill_;
      ++flats_left_;
    }
    if (ups_left_ > 0 && block_fill_ == block_size_) {
      --ups_left_;
      ++height_;
      const std::uint64_t saved_fill = block_fill_;
      block_fill_ = 0;
      current_.push_back(Step::Up);
      extend();
      current_.pop_back();
      block_fill_ = saved_fill;
      --height_;
      ++ups_left_;
    }
  }

  const std::function<void(const Path&)>& yield_;
  Path current_;
  std::uint64_t flats_left_;
  std::uint64_t ups_left_;
  std::uint64_t downs_left_;
  std::uint64_t block_size_;
  std::uint64_t block_fill_ = 0;  // flats placed since the last up
  std::int64_t height_ = 0;
};

class TreeEnumerator {
 public:
  TreeEnumerator(std::uint64_t t,
                 const std::function<void(const TAryTree&)>& yield)
      : yield_(yield), arity_(static_cast<int>(t)), tree_(arity_) {}

  void run(std::uint64_t n) {
    remaining_ = n;
    // one virtual slot for the root
    slots_.emplace_back(TAryTree::kNoNode, 0);
    decide();
    slots_.pop_back();
  }

 private:
  // resolve the next preorder slot: place a node ('(' sorts first), then
  // leave it empty when the remaining nodes still fit elsewhere
  void decide() {
    if (slots_.empty()) {
      assert(remaining_ == 0);
      yield_(tree_);
      return;
    }
    const auto [parent, slot] = slots_.back();
    slots_.pop_back();

    if (remaining_ > 0) {
      const std::int32_t node = tree_.add_node();
      if (parent != TAryTree::kNoNode) tree_.set_child(parent, slot, node);
      --remaining_;
      for (int s = arity_; s-- > 0;) slots_.emplace_back(node, s);
      decide();
      for (int s = 0; s < arity_; ++s) slots_.pop_back();
      ++remaining_;
      if (parent != TAryTree::kNoNode) {
        tree_.set_child(parent, slot, TAryTree::kNoNode);
      }
      tree_.remove_last_node();
    }

    if (remaining_ == 0 || !slots_.empty()) {
      decide();  // slot left empty
    }

    slots_.emplace_back(parent, slot);
  }

  const std::function<void(const TAryTree&)>& yield_;
  int arity_;
  TAryTree tree_;
  std::uint64_t remaining_ = 0;
  std::vector<std::pair<std::int32_t, int>> slots_;
};

}  // namespace

void enumerate_paths(std::uint64_t n, std::uint64_t t,
                     const std::function<void(const Path&)>& yield,
                     std::size_t max_length) {
  check_enumeration_bound(n, t, max_length);
  PathEnumerator(n, t, yield).run();
}

std::vector<Path> enumerate_paths(std::uint64_t n, std::uint64_t t,
                                  std::size_t max_length) {
  std::vector<Path> paths;
  enumerate_paths(
      n, t, [&](const Path& p) { paths.push_back(p); }, max_length);
  return paths;
}

void enumerate_trees(std::uint64_t n, std::uint64_t t,
                     const std::function<void(const TAryTree&)>& yield,
                     std::size_t max_length) {
  check_enumeration_bound(n, t, max_length);
  TreeEnumerator(t, yield).run(n);
}

std::vector<TAryTree> enumerate_trees(std::uint64_t n, std::uint64_t t,
                                      std::size_t max_length) {
  std::vector<TAryTree> trees;
  enumerate_trees(
      n, t, [&](const TAryTree& tr) { trees.push_back(tr); }, max_length);
  return trees;
}

namespace {

void walk_dfs(std::int64_t x, std::int64_t y, std::int64_t z,
              std::uint64_t moves_left, std::int64_t target,
              std::uint64_t& count) {
  if (moves_left == 0) {
    if (x == target && y == target && z == target) ++count;
    return;
  }
  if (omega_contains(x + 1, y, z)) {
    walk_dfs(x + 1, y, z, moves_left - 1, target, count);
  }
  if (omega_contains(x, y + 1, z)) {
    walk_dfs(x, y + 1, z, moves_left - 1, target, count);
  }
  if (omega_contains(x, y, z + 1)) {
    walk_dfs(x, y, z + 1, moves_left - 1, target, count);
  }
}

}  // namespace

BigCount count_walks_brute(std::uint64_t n) {
  if (n > kMaxBruteWalkSize) {
    throw BoundExceededError("brute-force walk count supports n <= " +
                             std::to_string(kMaxBruteWalkSize));
  }
  std::uint64_t count = 0;
  walk_dfs(0, 0, 0, 3 * n, static_cast<std::int64_t>(n), count);
  return BigCount(count);
}

}  // namespace smotzkin
