#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphaconv/point.hpp"

namespace alphaconv {

enum class Verdict { Pass, Fail };
std::string_view to_string(Verdict v);

/// A sampled instance of an inequality "lhs <= rhs" that failed by more than
/// the tolerance. Which of x, y, t are present depends on the check.
struct Witness {
  std::optional<Point> x;
  std::optional<Point> y;
  std::optional<Scalar> t;
  Scalar lhs;
  Scalar rhs;
  std::vector<std::pair<std::string, Point>> extra;  // functionals, cycle nodes, ...
};

/// Outcome of a sampled universal inequality. Pass means "not refuted on
/// the sample"; Fail always carries a witness.
struct CheckReport {
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  std::size_t samples_checked = 0;
  Mode mode = Mode::Exact;
  double tolerance = 0.0;
  std::vector<std::string> notes;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
};

}  // namespace alphaconv
