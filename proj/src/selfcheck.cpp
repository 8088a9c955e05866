#include "smotzkin/selfcheck.hpp"

#include <algorithm>
#include <set>

#include "smotzkin/bijection.hpp"
#include "smotzkin/combinat.hpp"
#include "smotzkin/lattice.hpp"
#include "smotzkin/validate.hpp"

namespace smotzkin {

namespace {

std::string fail_at(int t, int n, const std::string& what) {
  return "t=" + std::to_string(t) + " n=" + std::to_string(n) + ": " + what;
}

CheckResult check_counts(int t, int max_n) {
  CheckResult result{"counts t=" + std::to_string(t) +
                         " n<=" + std::to_string(max_n),
                     true, ""};
  for (int n = 0; n <= max_n && result.passed; ++n) {
    const BigCount expected = count_paths(n, t);
    std::uint64_t paths = 0;
    bool all_valid = true;
    enumerate_paths(n, t, [&](const Path& p) {
      ++paths;
      all_valid = all_valid && is_smotzkin(p, t);
    });
    std::uint64_t trees = 0;
    bool all_reparse = true;
    enumerate_trees(n, t, [&](const TAryTree& tr) {
      ++trees;
      all_reparse = all_reparse && parse_tree(format_tree(tr), t) == tr;
    });
    if (!all_valid) {
      result = {result.name, false, fail_at(t, n, "enumerated path invalid")};
    } else if (!all_reparse) {
      result = {result.name, false,
                fail_at(t, n, "enumerated tree does not reparse")};
    } else if (BigCount(paths) != expected || BigCount(trees) != expected) {
      result = {result.name, false,
                fail_at(t, n,
                        "paths=" + std::to_string(paths) +
                            " trees=" + std::to_string(trees) +
                            " formula=" + expected.to_string())};
    }
  }
  return result;
}

CheckResult check_roundtrips(int max_n) {
  CheckResult result{"roundtrips t=3 n<=" + std::to_string(max_n), true, ""};
  for (int n = 0; n <= max_n && result.passed; ++n) {
    enumerate_paths(n, 3, [&](const Path& p) {
      if (result.passed && tree_to_path(path_to_tree(p)) != p) {
        result = {result.name, false,
                  fail_at(3, n, "path roundtrip broke " + format_path(p))};
      }
    });
    enumerate_trees(n, 3, [&](const TAryTree& tr) {
      if (result.passed && !(path_to_tree(tree_to_path(tr)) == tr)) {
        result = {result.name, false,
                  fail_at(3, n, "tree roundtrip broke " + format_tree(tr))};
      }
    });
  }
  return result;
}

CheckResult check_bijectivity(int max_n) {
  CheckResult result{"bijectivity t=3 n<=" + std::to_string(max_n), true, ""};
  for (int n = 0; n <= max_n && result.passed; ++n) {
    std::set<std::string> images;
    std::uint64_t paths = 0;
    enumerate_paths(n, 3, [&](const Path& p) {
      ++paths;
      images.insert(format_tree(path_to_tree(p)));
    });
    if (images.size() != paths) {
      result = {result.name, false, fail_at(3, n, "map is not injective")};
      break;
    }
    std::set<std::string> trees;
    enumerate_trees(n, 3,
                    [&](const TAryTree& tr) { trees.insert(format_tree(tr)); });
    if (images != trees) {
      result = {result.name, false,
                fail_at(3, n, "image is not the full tree set")};
    }
  }
  return result;
}

CheckResult check_walk_counts(int max_n) {
  CheckResult result{"walk-counts n<=" + std::to_string(max_n), true, ""};
  for (int n = 0; n <= max_n && result.passed; ++n) {
    const BigCount walks = count_walks_brute(n);
    const BigCount paths = count_paths(n, 3);
    if (walks != paths) {
      result = {result.name, false,
                fail_at(3, n,
                        "walks=" + walks.to_string() +
                            " paths=" + paths.to_string())};
    }
  }
  return result;
}

// every word over {X,Y,Z} of length 3n: allowed frog walk <=> S-Motzkin path
CheckResult check_walk_words(int max_n) {
  CheckResult result{"walk-words n<=" + std::to_string(max_n), true, ""};
  for (int n = 0; n <= max_n && result.passed; ++n) {
    const std::size_t len = 3 * static_cast<std::size_t>(n);
    Walk walk(len, Move::X);
    while (true) {
      if (is_valid_frog_walk(walk) != is_smotzkin(walk_to_path(walk), 3)) {
        result = {result.name, false,
                  fail_at(3, n, "mismatch at " + format_walk(walk))};
        break;
      }
      std::size_t i = 0;
      while (i < len && walk[i] == Move::Z) {
        walk[i] = Move::X;
        ++i;
      }
      if (i == len) break;
      walk[i] = walk[i] == Move::X ? Move::Y : Move::Z;
    }
  }
  return result;
}

}  // namespace

std::vector<CheckResult> run_self_checks(int max_n,
                                         const std::vector<int>& ts) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  // surface bound problems before any partial output
  for (const int t : ts) {
    if (t < 2) throw std::invalid_argument("arity must be at least 2");
    if (static_cast<std::size_t>(t) * static_cast<std::size_t>(max_n) >
        kDefaultMaxEnumerationLength) {
      throw BoundExceededError(
          "self-check bound exceeded: t*max_n = " + std::to_string(t) + "*" +
          std::to_string(max_n) + " > " +
          std::to_string(kDefaultMaxEnumerationLength));
    }
  }

  std::vector<CheckResult> results;
  for (const int t : ts) results.push_back(check_counts(t, max_n));
  if (std::find(ts.begin(), ts.end(), 3) != ts.end()) {
    results.push_back(check_roundtrips(max_n));
    results.push_back(check_bijectivity(max_n));
    results.push_back(check_walk_counts(
        std::min(max_n, static_cast<int>(kMaxBruteWalkSize))));
    results.push_back(check_walk_words(std::min(max_n, 4)));
  }
  return results;
}

}  // namespace smotzkin
