#pragma once

#include <cstddef>
#include <utility>

#include "smotzkin/path.hpp"
#include "smotzkin/tree.hpp"
#include "smotzkin/validate.hpp"

namespace smotzkin {

/// One node's worth of an S-Motzkin path: the subpaths that hang off the
/// left, middle, and right subtrees. a, b, c are themselves S-Motzkin.
/// b_split_index is the length of the B1 prefix of b: B1 is empty or ends
/// with the last up step of b, and the remainder B2 is all downs.
struct Decomposition {
  Path a;
  Path b;
  Path c;
  std::size_t b_split_index = 0;
};

/// Canonical decomposition of a nonempty S-Motzkin path (t=3).
///
/// With heights h and L = |m|:
///   - p is the penultimate return, the last index < L with h = 0;
///     c = m[p+1 .. L-1) (the step at p is an up, the step at L-1 a down).
///   - x is the last flat step before p.
///   - y is the leftmost flat at the height of x from which the path reaches
///     x without dipping below that height; a = m[y .. x).
///   - b is what remains: m[0 .. y) ++ m[x+1 .. p).
///
/// Throws std::invalid_argument on an empty path and InvalidPathError when
/// the input is not S-Motzkin.
Decomposition decompose(const Path& m);

/// Splits b at (and including) its last up step: (B1, B2). B2 consists of
/// down steps only; both halves are empty when b is empty.
std::pair<Path, Path> split_b(const Path& b);

/// Inverse of decompose: B1 ++ a ++ F ++ B2 ++ U ++ c ++ D.
/// Each argument must be S-Motzkin (t=3); throws InvalidPathError otherwise.
Path compose(const Path& a, const Path& b, const Path& c);

/// Converts an S-Motzkin path of length 3n into the ternary tree with n
/// nodes, applying the decomposition recursively (explicit work stack, so
/// input size is bounded only by memory). Throws InvalidPathError when the
/// input is not S-Motzkin.
TAryTree path_to_tree(const Path& m);

/// Inverse conversion, built bottom-up; requires arity 3.
Path tree_to_path(const TAryTree& tree);

namespace detail {

// Recursion workhorses: preconditions assumed, re-checked only by asserts.
Decomposition decompose_unchecked(const Path& m);
Path compose_unchecked(const Path& a, const Path& b, const Path& c);

}  // namespace detail

}  // namespace smotzkin
