#pragma once

#include <string>
#include <vector>

namespace smotzkin {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed
};

/// Runs the cross-verification suite up to max_n for each arity in ts:
/// enumeration cardinalities against the closed form, conversion roundtrips
/// and bijectivity (arity 3), and the frog-walk equivalences (arity 3).
/// Requires t*max_n within the default enumeration bound for every t.
std::vector<CheckResult> run_self_checks(int max_n, const std::vector<int>& ts);

}  // namespace smotzkin
