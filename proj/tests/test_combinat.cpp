#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "smotzkin/combinat.hpp"
#include "smotzkin/validate.hpp"
#include "size3_fixtures.hpp"

using namespace smotzkin;

namespace {

// Independent route to the same numbers: the generating function of t-ary
// trees satisfies A(x) = 1 + x*A(x)^t, so coefficient n+1 of A is
// coefficient n of A^t. Computed by plain series convolution.
std::vector<std::uint64_t> tree_series(int t, int max_n) {
  std::vector<std::uint64_t> a{1};
  for (int n = 0; n < max_n; ++n) {
    std::vector<unsigned __int128> power{1};
    for (int rep = 0; rep < t; ++rep) {
      std::vector<unsigned __int128> next(static_cast<std::size_t>(n) + 1, 0);
      for (std::size_t i = 0; i < power.size(); ++i) {
        for (std::size_t j = 0; i + j <= static_cast<std::size_t>(n) &&
                                j < a.size();
             ++j) {
          next[i + j] += power[i] * a[j];
        }
      }
      power = std::move(next);
    }
    a.push_back(static_cast<std::uint64_t>(power[static_cast<std::size_t>(n)]));
  }
  return a;
}

std::uint64_t count_emitted_paths(int n, int t) {
  std::uint64_t total = 0;
  enumerate_paths(n, t, [&](const Path&) { ++total; });
  return total;
}

std::uint64_t count_emitted_trees(int n, int t) {
  std::uint64_t total = 0;
  enumerate_trees(n, t, [&](const TAryTree&) { ++total; });
  return total;
}

}  // namespace

TEST_CASE("BigCount arithmetic") {
  CHECK(BigCount().to_string() == "0");
  CHECK(BigCount(0) == BigCount());
  CHECK(BigCount(123456789012345ULL).to_string() == "123456789012345");
  CHECK(BigCount(18446744073709551615ULL).to_string() ==
        "18446744073709551615");
  CHECK(BigCount(42).to_uint64() == 42);

  BigCount v(1);
  for (int i = 0; i < 5; ++i) v.multiply(1000000007ULL);
  CHECK(v.to_string() == "1000000035000000490000003430000012005000016807");
  CHECK_FALSE(v.to_uint64().has_value());
  for (int i = 0; i < 5; ++i) CHECK(v.divide(1000000007ULL) == 0);
  CHECK(v == BigCount(1));
  CHECK(BigCount(100).divide(7) == 2);
  CHECK_THROWS_AS(BigCount(1).divide(0), std::domain_error);
}

TEST_CASE("count_paths closed form") {
  CHECK(count_paths(3, 3).to_string() == "12");
  CHECK(count_paths(4, 3).to_string() == "55");
  CHECK(count_paths(3, 2).to_string() == "5");
  for (const int t : {2, 3, 4, 5, 9}) CHECK(count_paths(0, t) == BigCount(1));

  const std::vector<std::string> ternary{"1",   "1",   "3",   "12",
                                         "55",  "273", "1428"};
  for (std::size_t n = 0; n < ternary.size(); ++n) {
    CHECK(count_paths(n, 3).to_string() == ternary[n]);
  }

  // values beyond 64 bits, frozen from independent big-integer arithmetic
  CHECK(count_paths(20, 3).to_string() == "102240109897695");
  CHECK(count_paths(30, 3).to_string() == "11034966795189838872624");
  CHECK(count_paths(25, 2).to_string() == "4861946401452");
  CHECK(count_paths(12, 5).to_string() == "28558343775");
  CHECK(count_paths(100, 3).to_string() ==
        "2068781822516698878001683346431047552378341296389874979434345103136"
        "6946907084620");

  CHECK_THROWS_AS(count_paths(1, 1), std::invalid_argument);
}

TEST_CASE("count_paths agrees with the tree generating function") {
  for (const int t : {2, 3, 4, 5}) {
    const auto series = tree_series(t, 12);
    for (std::size_t n = 0; n < series.size(); ++n) {
      CHECK(count_paths(n, t) == BigCount(series[n]));
    }
  }
}

TEST_CASE("Catalan numbers at arity 2") {
  const std::vector<std::uint64_t> catalan{1,   1,    2,    5,     14,   42,
                                           132, 429,  1430, 4862,  16796};
  for (std::size_t n = 0; n < catalan.size(); ++n) {
    CHECK(count_paths(n, 2) == BigCount(catalan[n]));
  }
}

TEST_CASE("enumerate_paths small cases") {
  const auto texts = [](int n, int t) {
    std::vector<std::string> out;
    enumerate_paths(n, t, [&](const Path& p) { out.push_back(format_path(p)); });
    return out;
  };
  CHECK(texts(0, 3) == std::vector<std::string>{""});
  CHECK(texts(1, 3) == std::vector<std::string>{"FUD"});
  CHECK(texts(2, 3) ==
        std::vector<std::string>{"FUDFUD", "FUFDUD", "FUFUDD"});
  CHECK(texts(1, 4) == std::vector<std::string>{"FFUD"});
  CHECK(texts(2, 2) == std::vector<std::string>{"UDUD", "UUDD"});

  // n = 3 yields exactly the fixture table, in order
  const auto size3 = texts(3, 3);
  REQUIRE(size3.size() == kSizeThreePairCount);
  for (int i = 0; i < kSizeThreePairCount; ++i) {
    CHECK(size3[static_cast<std::size_t>(i)] == kSizeThreePairs[i].path);
  }
}

TEST_CASE("enumerate_trees small cases") {
  const auto texts = [](int n, int t) {
    std::vector<std::string> out;
    enumerate_trees(n, t,
                    [&](const TAryTree& tr) { out.push_back(format_tree(tr)); });
    return out;
  };
  CHECK(texts(0, 3) == std::vector<std::string>{"."});
  CHECK(texts(1, 3) == std::vector<std::string>{"(...)"});
  CHECK(texts(2, 3) ==
        std::vector<std::string>{"((...)..)", "(.(...).)", "(..(...))"});
  CHECK(texts(2, 2) ==
        std::vector<std::string>{"((..).)", "(.(..))"});
}

TEST_CASE("enumeration output is sorted, unique, valid, and fully counted") {
  for (const int t : {2, 3, 4, 5}) {
    for (int n = 0; t * n <= 16; ++n) {
      std::vector<std::string> paths;
      enumerate_paths(n, t, [&](const Path& p) {
        CHECK(is_smotzkin(p, t));
        paths.push_back(format_path(p));
      });
      CHECK(std::is_sorted(paths.begin(), paths.end()));
      CHECK(std::set<std::string>(paths.begin(), paths.end()).size() ==
            paths.size());
      CHECK(BigCount(paths.size()) == count_paths(n, t));

      std::vector<std::string> trees;
      enumerate_trees(n, t, [&](const TAryTree& tr) {
        CHECK(parse_tree(format_tree(tr), t) == tr);
        trees.push_back(format_tree(tr));
      });
      CHECK(std::is_sorted(trees.begin(), trees.end()));
      CHECK(std::set<std::string>(trees.begin(), trees.end()).size() ==
            trees.size());
      CHECK(BigCount(trees.size()) == count_paths(n, t));
    }
  }
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(count_emitted_paths(9, 3), BoundExceededError);
  CHECK_THROWS_AS(count_emitted_trees(13, 2), BoundExceededError);
  CHECK(count_emitted_paths(8, 3) == 43263);  // t*n = 24 still allowed
  // callers may raise the cap explicitly
  std::uint64_t total = 0;
  enumerate_paths(9, 3, [&](const Path&) { ++total; }, 27);
  CHECK(BigCount(total) == count_paths(9, 3));
}

TEST_CASE("count_walks_brute") {
  CHECK(count_walks_brute(0) == BigCount(1));
  CHECK(count_walks_brute(1) == BigCount(1));
  CHECK(count_walks_brute(3) == BigCount(12));
  for (int n = 0; n <= 5; ++n) CHECK(count_walks_brute(n) == count_paths(n, 3));
  CHECK_THROWS_AS(count_walks_brute(6), BoundExceededError);
}
