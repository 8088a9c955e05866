#include "smotzkin/validate.hpp"

namespace smotzkin {

std::string_view to_string(PathViolation violation) {
  switch (violation) {
    case PathViolation::NotNonnegative: return "NotNonnegative";
    case PathViolation::NotClosed: return "NotClosed";
    case PathViolation::WrongStepCounts: return "WrongStepCounts";
    case PathViolation::BadInitialBlock: return "BadInitialBlock";
    case PathViolation::BadFlatUpAlternation: return "BadFlatUpAlternation";
    case PathViolation::DownTooEarly: return "DownTooEarly";
  }
  return "UnknownViolation";
}

bool is_motzkin(const Path& path) {
  std::int64_t height = 0;
  for (const Step s : path) {
    height += height_delta(s);
    if (height < 0) return false;
  }
  return height == 0;
}

PathClassReport classify_smotzkin(const Path& path, int t,
                                  bool enforce_down_rule) {
  if (t < 2) throw std::invalid_argument("arity must be at least 2");

  // (a) Motzkin: nonnegative prefix heights, closed at height 0
  std::int64_t height = 0;
  for (const Step s : path) {
    height += height_delta(s);
    if (height < 0) {
      return PathClassReport::fail(PathViolation::NotNonnegative);
    }
  }
  if (height != 0) return PathClassReport::fail(PathViolation::NotClosed);

  // (b) length t*n with (t-2)n flats and n of each of up/down
  const auto arity = static_cast<std::size_t>(t);
  if (path.size() % arity != 0) {
    return PathClassReport::fail(PathViolation::WrongStepCounts);
  }
  const std::size_t n = path.size() / arity;
  std::size_t flats = 0;
  std::size_t ups = 0;
  for (const Step s : path) {
    if (s == Step::Flat) {
      ++flats;
    } else if (s == Step::Up) {
      ++ups;
    }
  }
  const std::size_t downs = path.size() - flats - ups;
  if (flats != (arity - 2) * n || ups != n || downs != n) {
    return PathClassReport::fail(PathViolation::WrongStepCounts);
  }

  // (c) the flat/up subsequence must read (F^(t-2) U)^n; this single
  // comparison covers the initial flat block and the flats-between-ups rule
  const std::size_t block = arity - 1;
  std::size_t k = 0;
  for (const Step s : path) {
    if (s == Step::Down) continue;
    const bool expect_flat = (k % block) < arity - 2;
    if ((s == Step::Flat) != expect_flat) {
      return PathClassReport::fail(PathViolation::BadFlatUpAlternation);
    }
    ++k;
  }

  // (d) the k-th down must come after the k-th up
  if (enforce_down_rule) {
    std::size_t u = 0;
    std::size_t d = 0;
    for (const Step s : path) {
      if (s == Step::Up) {
        ++u;
      } else if (s == Step::Down && ++d > u) {
        return PathClassReport::fail(PathViolation::DownTooEarly);
      }
    }
  }

  return PathClassReport::ok();
}

bool is_smotzkin(const Path& path, int t) {
  return classify_smotzkin(path, t).is_valid();
}

InvalidPathError::InvalidPathError(PathClassReport report)
    : std::invalid_argument(
          "invalid path: " +
          std::string(report.violation ? to_string(*report.violation)
                                       : std::string_view("unspecified"))),
      report_(report) {}

}  // namespace smotzkin
