#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alphaconv/point.hpp"
#include "alphaconv/sample_table.hpp"

namespace alphaconv {

/// Candidate function f : D -> R from a fixed catalog.
class FunctionOracle {
 public:
  struct QuadraticForm {
    std::vector<std::vector<Scalar>> a;  // symmetric d x d
    Point b;
    Scalar c0;
  };
  // eps * sum_i |x_i|^p; for d = 1 this is eps |x|^p.
  struct PowerAbs {
    Scalar eps;
    double p;
  };
  // sum_i |x_i|; for d = 1 this is |x|.
  struct AbsVal {};
  struct Tabulated {
    SampleTable table;
  };
  struct Sum {
    std::vector<FunctionOracle> terms;
  };
  using Variant = std::variant<QuadraticForm, PowerAbs, AbsVal, Tabulated, Sum>;

  static FunctionOracle quadratic_form(std::vector<std::vector<Scalar>> a, Point b, Scalar c0);
  /// x -> c |x|^2 in dimension d (identity-matrix quadratic form).
  static FunctionOracle scaled_norm_squared(std::size_t dim, const Scalar& c);
  static FunctionOracle power_abs(Scalar eps, double p);
  static FunctionOracle abs_val() { return FunctionOracle(AbsVal{}); }
  static FunctionOracle tabulated(SampleTable table) { return FunctionOracle(Tabulated{std::move(table)}); }
  static FunctionOracle sum(std::vector<FunctionOracle> terms);

  /// Deterministic. Tabulated oracles throw EvaluationError off their carrier.
  Scalar operator()(const Point& x) const;

  /// Fixed dimension, if the oracle pins one (quadratic forms, tables).
  std::optional<std::size_t> fixed_dim() const;
  bool exact_capable() const;
  void require_mode(Mode mode, std::size_t dim) const;

  std::string describe() const;
  const Variant& variant() const noexcept { return v_; }

 private:
  explicit FunctionOracle(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

}  // namespace alphaconv
