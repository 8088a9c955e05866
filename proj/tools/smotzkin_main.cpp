#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smotzkin/bijection.hpp"
#include "smotzkin/combinat.hpp"
#include "smotzkin/lattice.hpp"
#include "smotzkin/selfcheck.hpp"
#include "smotzkin/tree.hpp"
#include "smotzkin/validate.hpp"

namespace {

using namespace smotzkin;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct Outcome {
  bool ok;
  std::string text;  // converted encoding, or a diagnostic
};

std::string walk_diagnostic(const Walk& walk) {
  if (const auto bad = first_omega_violation(walk)) {
    return "outside-omega at move " + std::to_string(*bad + 1);
  }
  if (!is_valid_frog_walk(walk)) return "wrong-endpoint";
  return "valid";
}

Outcome validate_one(const std::string& kind, int t, const std::string& line) {
  try {
    if (kind == "path") {
      const auto report = classify_smotzkin(parse_path(line), t);
      if (report.is_valid()) return {true, "valid"};
      return {false, std::string(to_string(*report.violation))};
    }
    if (kind == "walk") {
      const std::string diag = walk_diagnostic(parse_walk(line));
      return {diag == "valid", diag};
    }
    parse_tree(line, t);
    return {true, "valid"};
  } catch (const ParseError& e) {
    return {false, e.what()};
  }
}

Outcome convert_one(const std::string& from, const std::string& to, int t,
                    const std::string& line) {
  try {
    Path path;
    if (from == "path") {
      path = parse_path(line);
      const auto report = classify_smotzkin(path, t);
      if (!report.is_valid()) {
        return {false, std::string(to_string(*report.violation))};
      }
    } else if (from == "walk") {
      const Walk walk = parse_walk(line);
      const std::string diag = walk_diagnostic(walk);
      if (diag != "valid") return {false, diag};
      path = walk_to_path(walk);
    } else {  // tree
      path = tree_to_path(parse_tree(line, 3));
    }

    if (to == "path") return {true, format_path(path)};
    if (to == "walk") return {true, format_walk(path_to_walk(path))};
    const TAryTree tree = path_to_tree(path);
    if (tree_to_path(tree) != path) {
      return {false, "internal error: conversion roundtrip mismatch"};
    }
    return {true, format_tree(tree)};
  } catch (const ParseError& e) {
    return {false, e.what()};
  } catch (const InvalidPathError& e) {
    return {false, std::string(to_string(*e.report().violation))};
  }
}

int gather_inputs(const std::optional<std::string>& input,
                  const std::string& file, std::vector<std::string>& lines) {
  if (!file.empty() && input.has_value()) {
    std::cerr << "error: give either an input argument or --file, not both\n";
    return kExitUsage;
  }
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open file: " << file << "\n";
      return kExitUsage;
    }
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return 0;
  }
  if (!input.has_value()) {
    std::cerr << "error: an input argument or --file is required\n";
    return kExitUsage;
  }
  lines.push_back(*input);
  return 0;
}

bool valid_kind(const std::string& kind, bool allow_walk) {
  return kind == "path" || kind == "tree" || (allow_walk && kind == "walk");
}

int run_validate(const std::string& kind, int t,
                 const std::optional<std::string>& input,
                 const std::string& file) {
  if (!valid_kind(kind, true)) {
    std::cerr << "error: unknown kind '" << kind
              << "' (expected path, walk, or tree)\n";
    return kExitUsage;
  }
  if (t < 2) {
    std::cerr << "error: --t must be at least 2\n";
    return kExitUsage;
  }
  std::vector<std::string> lines;
  if (const int rc = gather_inputs(input, file, lines); rc != 0) return rc;
  bool all_ok = true;
  for (const auto& line : lines) {
    const Outcome out = validate_one(kind, t, line);
    std::cout << out.text << "\n";
    all_ok = all_ok && out.ok;
  }
  return all_ok ? kExitValid : kExitInvalid;
}

int run_convert(const std::string& from, const std::string& to, int t,
                const std::optional<std::string>& input,
                const std::string& file) {
  if (!valid_kind(from, true) || !valid_kind(to, true)) {
    std::cerr << "error: --from/--to must be path, tree, or walk\n";
    return kExitUsage;
  }
  if (from == to) {
    std::cerr << "error: unsupported conversion " << from << " -> " << to
              << "\n";
    return kExitUsage;
  }
  if (t < 2) {
    std::cerr << "error: --t must be at least 2\n";
    return kExitUsage;
  }
  if ((from == "tree" || to == "tree") && t != 3) {
    std::cerr << "error: tree conversions require --t 3\n";
    return kExitUsage;
  }
  std::vector<std::string> lines;
  if (const int rc = gather_inputs(input, file, lines); rc != 0) return rc;
  const bool batch = !file.empty();
  bool all_ok = true;
  for (const auto& line : lines) {
    const Outcome out = convert_one(from, to, t, line);
    if (out.ok) {
      std::cout << out.text << "\n";
    } else {
      all_ok = false;
      if (batch) {
        std::cout << "error: " << out.text << "\n";
      } else {
        std::cerr << "error: " << out.text << "\n";
      }
    }
  }
  return all_ok ? kExitValid : kExitInvalid;
}

int run_enumerate(const std::string& kind, int n, int t, bool count_only) {
  if (!valid_kind(kind, false)) {
    std::cerr << "error: unknown kind '" << kind
              << "' (expected path or tree)\n";
    return kExitUsage;
  }
  if (n < 0 || t < 2) {
    std::cerr << "error: need --n >= 0 and --t >= 2\n";
    return kExitUsage;
  }
  std::uint64_t total = 0;
  if (kind == "path") {
    enumerate_paths(n, t, [&](const Path& p) {
      ++total;
      if (!count_only) std::cout << format_path(p) << "\n";
    });
  } else {
    enumerate_trees(n, t, [&](const TAryTree& tr) {
      ++total;
      if (!count_only) std::cout << format_tree(tr) << "\n";
    });
  }
  if (count_only) std::cout << total << "\n";
  return kExitValid;
}

int run_count(int n, int t, bool brute) {
  if (n < 0 || t < 2) {
    std::cerr << "error: need --n >= 0 and --t >= 2\n";
    return kExitUsage;
  }
  const BigCount exact = count_paths(n, t);
  if (brute) {
    std::uint64_t paths = 0;
    std::uint64_t trees = 0;
    enumerate_paths(n, t, [&](const Path&) { ++paths; });
    enumerate_trees(n, t, [&](const TAryTree&) { ++trees; });
    if (BigCount(paths) != exact || BigCount(trees) != exact) {
      std::cout << exact.to_string() << "\n";
      std::cerr << "error: enumeration disagrees with the formula (paths="
                << paths << ", trees=" << trees << ")\n";
      return kExitInvalid;
    }
  }
  std::cout << exact.to_string() << "\n";
  return kExitValid;
}

std::vector<std::string> render_path_rows(const Path& path) {
  if (path.empty()) return {};
  const auto h = height_profile(path);
  const std::int64_t top = *std::max_element(h.begin(), h.end());
  std::vector<std::string> rows(static_cast<std::size_t>(top) + 1,
                                std::string(path.size(), ' '));
  for (std::size_t i = 0; i < path.size(); ++i) {
    std::int64_t level = 0;
    char glyph = ' ';
    switch (path[i]) {
      case Step::Flat:
        level = h[i];
        glyph = '_';
        break;
      case Step::Up:  // drawn at the level it reaches
        level = h[i + 1];
        glyph = '/';
        break;
      case Step::Down:  // drawn at the level it leaves
        level = h[i];
        glyph = '\\';
        break;
    }
    rows[static_cast<std::size_t>(top - level)][i] = glyph;
  }
  for (auto& row : rows) {
    const auto end = row.find_last_not_of(' ');
    row.erase(end == std::string::npos ? 0 : end + 1);
  }
  return rows;
}

void print_tree_outline(const TAryTree& tree) {
  if (tree.empty()) return;
  struct Item {
    std::int32_t node;
    int depth;
    int slot;  // position under the parent, -1 for the root
  };
  std::vector<Item> stack{{tree.root(), 0, -1}};
  while (!stack.empty()) {
    const auto [node, depth, slot] = stack.back();
    stack.pop_back();
    std::string line(2 * static_cast<std::size_t>(depth), ' ');
    if (slot >= 0) {
      if (tree.arity() == 3) {
        line += "LMR"[slot];
      } else {
        line += "C" + std::to_string(slot);
      }
      line += ": ";
    }
    line += "*";
    std::cout << line << "\n";
    for (int s = tree.arity(); s-- > 0;) {
      const auto child = tree.child(node, s);
      if (child != TAryTree::kNoNode) stack.push_back({child, depth + 1, s});
    }
  }
}

int run_render(const std::string& kind, int t,
               const std::optional<std::string>& input) {
  if (!valid_kind(kind, false)) {
    std::cerr << "error: unknown kind '" << kind
              << "' (expected path or tree)\n";
    return kExitUsage;
  }
  if (!input.has_value()) {
    std::cerr << "error: an input argument is required\n";
    return kExitUsage;
  }
  if (t < 2) {
    std::cerr << "error: --t must be at least 2\n";
    return kExitUsage;
  }
  try {
    if (kind == "path") {
      const Path path = parse_path(*input);
      // the grid has rows down to level 0 only: require a Motzkin path
      const auto h = height_profile(path);
      if (*std::min_element(h.begin(), h.end()) < 0) {
        std::cerr << "error: NotNonnegative\n";
        return kExitInvalid;
      }
      if (h.back() != 0) {
        std::cerr << "error: NotClosed\n";
        return kExitInvalid;
      }
      for (const auto& row : render_path_rows(path)) std::cout << row << "\n";
    } else {
      print_tree_outline(parse_tree(*input, t));
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitValid;
}

int run_check(int max_n, const std::vector<int>& ts) {
  if (max_n < 0) {
    std::cerr << "error: --max-n must be nonnegative\n";
    return kExitUsage;
  }
  std::vector<int> arities;
  for (const int t : ts) {
    if (t < 2) {
      std::cerr << "error: --t entries must be at least 2\n";
      return kExitUsage;
    }
    if (std::find(arities.begin(), arities.end(), t) == arities.end()) {
      arities.push_back(t);
    }
  }
  bool all_ok = true;
  for (const auto& result : run_self_checks(max_n, arities)) {
    std::cout << result.name << ": " << (result.passed ? "pass" : "fail");
    if (!result.passed) std::cout << " (" << result.detail << ")";
    std::cout << "\n";
    all_ok = all_ok && result.passed;
  }
  return all_ok ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{
      "S-Motzkin lattice paths, ternary trees, and the confined walk in Z^3"};
  app.require_subcommand(1);

  std::string v_kind;
  std::optional<std::string> v_input;
  int v_t = 3;
  std::string v_file;
  auto* validate = app.add_subcommand(
      "validate", "Check an object and report the first violated condition");
  validate->add_option("kind", v_kind, "path | walk | tree")->required();
  validate->add_option("input", v_input, "object text");
  validate->add_option("--t", v_t, "arity (default 3)");
  validate->add_option("--file", v_file, "batch mode: one object per line");

  std::string c_from;
  std::string c_to;
  std::optional<std::string> c_input;
  int c_t = 3;
  std::string c_file;
  auto* convert = app.add_subcommand(
      "convert", "Convert between path, tree, and walk encodings");
  convert->add_option("--from", c_from, "path | tree | walk")->required();
  convert->add_option("--to", c_to, "path | tree | walk")->required();
  convert->add_option("input", c_input, "object text");
  convert->add_option("--t", c_t, "arity (default 3)");
  convert->add_option("--file", c_file, "batch mode: one object per line");

  std::string e_kind;
  int e_n = 0;
  int e_t = 3;
  bool e_count_only = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "List every object of a given size in canonical order");
  enumerate->add_option("kind", e_kind, "path | tree")->required();
  enumerate->add_option("--n", e_n, "object size (up steps / nodes)")
      ->required();
  enumerate->add_option("--t", e_t, "arity (default 3)");
  enumerate->add_flag("--count-only", e_count_only,
                      "print only the number of objects");

  int n_n = 0;
  int n_t = 3;
  bool n_brute = false;
  auto* count =
      app.add_subcommand("count", "Exact closed-form object count");
  count->add_option("--n", n_n, "object size")->required();
  count->add_option("--t", n_t, "arity (default 3)");
  count->add_flag("--brute", n_brute,
                  "cross-check the formula against enumeration");

  std::string r_kind;
  std::optional<std::string> r_input;
  int r_t = 3;
  auto* render =
      app.add_subcommand("render", "Draw a path or tree as ASCII art");
  render->add_option("kind", r_kind, "path | tree")->required();
  render->add_option("input", r_input, "object text");
  render->add_option("--t", r_t, "arity (default 3, used by trees)");

  int k_max_n = 4;
  std::vector<int> k_ts{3};
  auto* check =
      app.add_subcommand("check", "Run the cross-verification suite");
  check->add_option("--max-n", k_max_n, "largest object size (default 4)");
  check->add_option("--t", k_ts, "comma-separated arities (default 3)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(v_kind, v_t, v_input, v_file);
    if (convert->parsed()) {
      return run_convert(c_from, c_to, c_t, c_input, c_file);
    }
    if (enumerate->parsed()) {
      return run_enumerate(e_kind, e_n, e_t, e_count_only);
    }
    if (count->parsed()) return run_count(n_n, n_t, n_brute);
    if (render->parsed()) return run_render(r_kind, r_t, r_input);
    if (check->parsed()) return run_check(k_max_n, k_ts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
