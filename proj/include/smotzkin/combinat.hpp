#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "smotzkin/bigcount.hpp"
#include "smotzkin/path.hpp"
#include "smotzkin/tree.hpp"

namespace smotzkin {

/// Enumerators refuse objects whose path length t*n exceeds this unless the
/// caller raises the limit explicitly.
inline constexpr std::size_t kDefaultMaxEnumerationLength = 24;

/// Largest n accepted by count_walks_brute.
inline constexpr std::uint64_t kMaxBruteWalkSize = 5;

class BoundExceededError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form count of t-generalized S-Motzkin paths with n up steps,
/// equal to the number of t-ary trees with n nodes:
///   C(t*n, n) / ((t-1)*n + 1)
/// computed exactly; every division along the way has remainder zero.
/// Requires t >= 2.
BigCount count_paths(std::uint64_t n, std::uint64_t t);

/// Visits every t-generalized S-Motzkin path of length t*n exactly once, in
/// ascending lexicographic order of the text encoding (D < F < U).
/// Backtracking search over step choices, pruning on remaining step budgets,
/// height nonnegativity, and the (F^(t-2) U)^n block word.
void enumerate_paths(std::uint64_t n, std::uint64_t t,
                     const std::function<void(const Path&)>& yield,
                     std::size_t max_length = kDefaultMaxEnumerationLength);

std::vector<Path> enumerate_paths(
    std::uint64_t n, std::uint64_t t,
    std::size_t max_length = kDefaultMaxEnumerationLength);

/// Visits every t-ary tree with n nodes exactly once, in ascending
/// lexicographic order of the canonical encoding ('(' < ')' < '.').
void enumerate_trees(std::uint64_t n, std::uint64_t t,
                     const std::function<void(const TAryTree&)>& yield,
                     std::size_t max_length = kDefaultMaxEnumerationLength);

std::vector<TAryTree> enumerate_trees(
    std::uint64_t n, std::uint64_t t,
    std::size_t max_length = kDefaultMaxEnumerationLength);

/// Exhaustive DFS count of region-confined walks from the origin to (n,n,n)
/// in exactly 3n moves, pruned only on region membership. n <= 5.
BigCount count_walks_brute(std::uint64_t n);

}  // namespace smotzkin
