#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alphaconv/check_report.hpp"
#include "alphaconv/domain.hpp"
#include "alphaconv/field.hpp"
#include "alphaconv/modulus.hpp"
#include "alphaconv/oracle.hpp"

namespace alphaconv {

// Universal quantifiers over D and T are relaxed to deterministic samples.
// Scans run over (x, y, t) in lexicographic index order and stop at the
// first violation, so witnesses are reproducible.

/// f(tx + (1-t)y) <= t f(x) + (1-t) f(y) - t alpha((1-t)(x-y)) - (1-t) alpha(t(y-x))
/// for all grid pairs and all enumerated t.
CheckReport check_strong_convexity(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                                   const TSet& tset, std::size_t grid, double tol = kDefaultTolerance);

/// Same inequality over an explicit point list.
CheckReport check_strong_convexity_on(const FunctionOracle& f, const Modulus& alpha,
                                      const std::vector<Point>& points, const TSet& tset,
                                      double tol = kDefaultTolerance);

/// T = {1/2}.
CheckReport check_jensen(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom, std::size_t grid,
                         double tol = kDefaultTolerance);

/// Checks a tabulated function on its own carrier: only pairs (x, y) and t
/// whose combination tx + (1-t)y is again a carrier point are tested.
CheckReport check_on_carrier(const SampleTable& table, const Modulus& alpha, const TSet& tset,
                             double tol = kDefaultTolerance);

/// Coefficients of the weighted sum of midpoint inequalities over the 2n-fold
/// subdivision x_i = x + (i/2n)(y - x), weights i (i <= n) and 2n - i (i > n).
struct SubdivisionCoefficients {
  std::vector<mpq_class> weights;       // index i = 1..2n-1 stored at i-1
  std::vector<mpq_class> net;           // net coefficient of f(x_j), j = 0..2n, left minus right
  mpq_class error_coefficient;          // sum of weights
  bool matches_expected = false;        // 0 interior, 1 at j = n, -1/2 at the ends, n^2 error
};

SubdivisionCoefficients subdivision_coefficients(std::size_t n);

struct SubdivisionReport {
  CheckReport check;
  Scalar direct_lhs;   // f((x+y)/2)
  Scalar direct_rhs;   // (f(x)+f(y))/2 - n^2 alpha((x-y)/(2n))
  bool direct_holds = false;
  SubdivisionCoefficients coefficients;
  bool chain_sum_matches = false;  // sum_i w_i slack_i == direct slack
  std::size_t step_violations = 0;
  std::optional<std::size_t> first_violated_step;
};

/// Strengthened midpoint inequality with error n^2 alpha((x-y)/(2n)), checked
/// directly and re-derived through the subdivision chain.
SubdivisionReport subdivision_certificate(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                                          const Point& x, const Point& y, std::size_t n,
                                          double tol = kDefaultTolerance);

inline constexpr unsigned kDefaultDerivativeDepth = 20;

struct DirectionalDerivative {
  Scalar value;                      // q(t_last), an upper bound for convex f
  Scalar bracket_lo;                 // q(t_last)
  Scalar bracket_hi;                 // q(t_prev)
  std::optional<Scalar> lower_bound; // (f(x0) - f(x0 - t_last h)) / t_last, a lower bound for convex f
  std::vector<unsigned> ks;          // probed exponents, t = 2^-k
  std::vector<Scalar> quotients;     // q(2^-k) for k in ks

  /// Best available lower estimate of the true limit.
  const Scalar& lower() const { return lower_bound ? *lower_bound : value; }
};

/// q(t) = (f(x0 + t h) - f(x0)) / t along t = 2^-k, k <= k_max, keeping only
/// t with x0 + t h inside the box.
DirectionalDerivative directional_derivative(const FunctionOracle& f, const BoxDomain& dom, const Point& x0,
                                             const Point& h, const FieldSpec& field = {},
                                             unsigned k_max = kDefaultDerivativeDepth,
                                             double tol = kDefaultTolerance);

/// Checks subadditivity and positive homogeneity of h -> f'(x0, h) on the
/// given directions, within the quotient brackets.
CheckReport sublinearity_test(const FunctionOracle& f, const BoxDomain& dom, const Point& x0,
                              const std::vector<Point>& directions, const FieldSpec& field = {},
                              unsigned k_max = kDefaultDerivativeDepth, double tol = kDefaultTolerance);

struct SupportResult {
  enum class Status { Found, Infeasible, Unbounded };
  Status status = Status::Found;
  std::optional<LinearFunctional> phi;  // present unless Infeasible
  Point x0;
  std::size_t constraints_used = 0;
  /// Nonnegative exact multipliers on sample constraints summing to 0 <= negative.
  std::vector<std::pair<Point, Scalar>> certificate;
  bool verified = false;  // phi re-substituted into every constraint

  bool feasible() const noexcept { return status != Status::Infeasible; }
};

std::string_view to_string(SupportResult::Status s);

/// Looks for phi with f(x) >= f(x0) + phi(x - x0) + alpha(x - x0) on the sample.
/// d = 1 intersects slope intervals; d >= 2 runs exact Fourier-Motzkin.
SupportResult support_search(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                             const Point& x0, const std::vector<Point>& sample, double tol = kDefaultTolerance);

struct CharacterizationReport {
  CheckReport convexity;             // (i)
  CheckReport derivative_inequality; // (ii)
  CheckReport support;               // (iii)
  bool agree = false;
  std::string caveat;
};

/// Runs the three equivalent characterizations of strong (alpha, F)-convexity
/// on a grid and reports whether their verdicts agree.
CharacterizationReport characterization_harness(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                                 const FieldSpec& field, std::size_t grid,
                                 unsigned k_max = kDefaultDerivativeDepth, double tol = kDefaultTolerance);

}  // namespace alphaconv
