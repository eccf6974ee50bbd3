#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "alphaconv/point.hpp"
#include "alphaconv/sample_table.hpp"

namespace alphaconv {

/// Error function alpha on D* = D - D. Nonnegative and even.
///
/// Closed forms evaluate in the mode of their argument. Exact evaluation is
/// available when the value is rational for rational input: Zero, Quadratic,
/// PowerNorm with an even integer exponent (any d) or an integer exponent
/// (d = 1), and Tabulated. SinSq is Float only.
class Modulus {
 public:
  struct Zero {};
  struct Quadratic {
    Scalar c;  // u -> c |u|^2
  };
  struct PowerNorm {
    Scalar eps;  // u -> eps |u|^p, Euclidean norm
    double p;
  };
  struct SinSq {};  // d = 1: u -> sin^2(u)
  struct Tabulated {
    SampleTable table;
  };
  using Variant = std::variant<Zero, Quadratic, PowerNorm, SinSq, Tabulated>;

  static Modulus zero() { return Modulus(Zero{}); }
  static Modulus quadratic(Scalar c);
  static Modulus power_norm(Scalar eps, double p);
  static Modulus sin_sq() { return Modulus(SinSq{}); }
  /// Validates nonnegativity and evenness of the table.
  static Modulus tabulated(SampleTable table, double tol = kDefaultTolerance);

  Scalar operator()(const Point& u) const;

  bool exact_capable(std::size_t dim) const;
  /// Load-time guard: throws ModeError if this modulus cannot be evaluated in mode.
  void require_mode(Mode mode, std::size_t dim) const;

  std::string describe() const;
  const Variant& variant() const noexcept { return v_; }

 private:
  explicit Modulus(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// True when p is a (positive) integer; exponents are small so the double test is exact.
bool is_integer_exponent(double p);

}  // namespace alphaconv
