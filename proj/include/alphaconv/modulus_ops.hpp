#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alphaconv/domain.hpp"
#include "alphaconv/field.hpp"
#include "alphaconv/modulus.hpp"

namespace alphaconv {

enum class Amplifier {
  JensenTilde,  // u -> sup_n n^2 alpha(u / n)
  ScalingHat,   // u -> sup_{t in (0,1] ∩ F} alpha(t u) / t
};

std::string_view to_string(Amplifier op);

inline constexpr std::size_t kDefaultTruncation = 1000;
inline constexpr unsigned kScalingDyadicDepth = 40;
inline constexpr double kDefaultDivergenceThreshold = 1e12;

/// How a value was decided: by a catalog closed form (a proof) or by
/// evaluating the truncated sup (a numerical statement).
enum class Evidence { ClosedForm, Numerical };
std::string_view to_string(Evidence e);

struct AmplifyResult {
  std::optional<Scalar> value;  // empty means DIVERGES
  Evidence evidence = Evidence::Numerical;
  std::size_t truncation = 0;   // N for Jensen, number of t samples for scaling
  std::optional<Scalar> argmax; // n or t attaining the truncated max

  bool diverges() const noexcept { return !value.has_value(); }
};

/// alpha~ or alpha^ truncated to a finite index set.
class AmplifiedModulus {
 public:
  static AmplifiedModulus jensen(Modulus base, std::size_t truncation = kDefaultTruncation);
  static AmplifiedModulus scaling(Modulus base, FieldSpec field = {});

  AmplifyResult at(const Point& u) const;

  const Modulus& base() const noexcept { return base_; }
  Amplifier op() const noexcept { return op_; }
  std::size_t truncation() const noexcept { return truncation_; }
  /// Present when the amplified modulus is again a catalog modulus.
  const std::optional<Modulus>& closed_form() const noexcept { return closed_form_; }

 private:
  AmplifiedModulus(Modulus base, Amplifier op, std::size_t truncation, FieldSpec field);

  Modulus base_;
  Amplifier op_;
  std::size_t truncation_;
  FieldSpec field_;
  std::optional<Modulus> closed_form_;
};

AmplifyResult amplify_jensen(const Modulus& alpha, const Point& u, std::size_t truncation = kDefaultTruncation);
AmplifyResult amplify_scaling(const Modulus& alpha, const Point& u, const FieldSpec& field = {});

/// n^2 alpha(u / n) for n = 1..N, no closed-form short cut.
std::vector<Scalar> jensen_sequence(const Modulus& alpha, const Point& u, std::size_t truncation);
/// max over n <= N of the Jensen sequence, by brute force.
AmplifyResult jensen_brute_force(const Modulus& alpha, const Point& u, std::size_t truncation);
/// 2^-k for k <= 40 together with the nonzero field samples, ascending.
std::vector<Scalar> scaling_samples(const FieldSpec& field, Mode mode);
AmplifyResult scaling_brute_force(const Modulus& alpha, const Point& u, const FieldSpec& field);

struct FeasibilityResult {
  bool feasible = true;
  std::optional<Point> witness_u;
  std::optional<std::size_t> witness_n;  // first n with n^2 alpha(u/n) > threshold (numerical only)
  Evidence evidence = Evidence::ClosedForm;
  std::size_t directions_scanned = 0;
  std::size_t truncation = 0;
};

/// Scans sampled u in (1/2)(D - D) \ {0} for limsup n^2 alpha(u/n) = inf.
/// Infeasible means no strongly alpha-Jensen convex function exists on D.
/// Feasible only means no divergence was detected at this truncation.
FeasibilityResult feasibility_check(const Modulus& alpha, const BoxDomain& dom,
                                    std::size_t truncation = kDefaultTruncation,
                                    double threshold = kDefaultDivergenceThreshold,
                                    std::size_t n_per_axis = 4);

struct ValidityResult {
  bool valid = true;
  bool zero_at_origin = true;
  std::optional<Point> failing_direction;
  Evidence evidence = Evidence::ClosedForm;
  std::vector<Scalar> last_terms;  // tail of alpha(2^-k h) 2^k for the reported direction
};

inline constexpr unsigned kDefaultValidityDepth = 40;

/// Necessary condition for any strongly (alpha, F)-convex function to exist:
/// alpha(0) = 0 and alpha(t h) / t -> 0 as t -> 0+ along every direction.
ValidityResult modulus_validity(const Modulus& alpha, const std::vector<Point>& directions,
                                unsigned k_max = kDefaultValidityDepth, double threshold = kDefaultTolerance);

/// alpha(2^-k h) * 2^k for k = 0..k_max.
std::vector<Scalar> validity_sequence(const Modulus& alpha, const Point& h, unsigned k_max);

}  // namespace alphaconv
