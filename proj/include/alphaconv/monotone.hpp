#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "alphaconv/check_report.hpp"
#include "alphaconv/convexity.hpp"
#include "alphaconv/errors.hpp"

namespace alphaconv {

/// Finite set-valued map x -> Phi(x) of linear functionals on a carrier.
class MultiMap {
 public:
  /// Carrier points pairwise distinct, every value list nonempty, one
  /// dimension and one mode throughout.
  MultiMap(std::vector<Point> carrier, std::vector<std::vector<LinearFunctional>> values);

  const std::vector<Point>& carrier() const noexcept { return carrier_; }
  const std::vector<std::vector<LinearFunctional>>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  std::size_t dim() const noexcept { return carrier_.front().dim(); }
  Mode mode() const { return carrier_.front().mode(); }

 private:
  std::vector<Point> carrier_;
  std::vector<std::vector<LinearFunctional>> values_;
};

/// [lo, hi] with an absent end meaning -inf / +inf.
struct SubdiffInterval {
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
  Scalar resolution;  // width of the quotient brackets the ends were read from
};

/// d = 1: [-f'(x0, -1), f'(x0, +1)] from difference quotients at t = 2^-k_max.
/// Both ends are upper estimates of their quotient limits, so the result
/// encloses the subdifferential up to the bracket width.
SubdiffInterval subdiff_1d(const FunctionOracle& f, const BoxDomain& dom, const Point& x0,
                           const FieldSpec& field = {}, unsigned k_max = kDefaultDerivativeDepth,
                           double tol = kDefaultTolerance);

/// f(x) >= f(x0) + phi(x - x0) + alpha(x - x0) on the sample.
CheckReport check_strengthened_subgradient(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                                           const Point& x0, const LinearFunctional& phi,
                                           const std::vector<Point>& sample, double tol = kDefaultTolerance);

/// phi(y - x) + alpha(y - x) + psi(x - y) + alpha(x - y) <= 0 for all ordered
/// carrier pairs and all phi in Phi(x), psi in Phi(y).
CheckReport alpha_monotone(const MultiMap& phi, const Modulus& alpha, double tol = kDefaultTolerance);

/// Complete digraph on the carrier with w(i -> j) = max_phi phi(x_j - x_i) + alpha(x_j - x_i).
class ChainGraph {
 public:
  ChainGraph(const MultiMap& phi, const Modulus& alpha);

  std::size_t size() const noexcept { return weights_.size(); }
  const Scalar& weight(std::size_t i, std::size_t j) const { return weights_[i][j]; }
  /// Index into Phi(x_i) attaining the edge maximum.
  std::size_t choice(std::size_t i, std::size_t j) const { return choices_[i][j]; }
  /// Sum of edge weights around cycle[0] -> cycle[1] -> ... -> cycle[0].
  Scalar cycle_weight(const std::vector<std::size_t>& cycle) const;

 private:
  std::vector<std::vector<Scalar>> weights_;
  std::vector<std::vector<std::size_t>> choices_;
};

/// A cycle whose sum, with per-node functional choices, exceeds its length
/// times the tolerance (zero in Exact mode).
struct PositiveCycle {
  std::vector<std::size_t> nodes;    // x_{nodes[0]} -> ... -> back to the first
  std::vector<std::size_t> choices;  // index into Phi at each node
  Scalar weight;
};

inline constexpr std::size_t kExhaustiveCarrierLimit = 12;
inline constexpr std::size_t kExhaustiveWorkBudget = 50'000'000;

/// Decider (a): every simple cycle of length <= max_cycle_len (self-loops
/// included) with every per-node functional choice. nullopt from the outer
/// optional means the decider did not run (carrier or work budget).
std::optional<std::optional<PositiveCycle>> find_positive_cycle_exhaustive(const MultiMap& phi, const Modulus& alpha,
                                                                           std::size_t max_cycle_len,
                                                                           double tol = kDefaultTolerance);

/// Decider (b): Bellman-Ford longest-path relaxation on the chain graph with
/// every edge lowered by the tolerance; covers all cycle lengths.
std::optional<PositiveCycle> find_positive_cycle_relaxation(const ChainGraph& graph, Mode mode,
                                                            double tol = kDefaultTolerance);

struct CyclicMonotoneReport {
  CheckReport check;  // verdict from decider (b)
  bool exhaustive_ran = false;
  std::optional<Verdict> exhaustive_verdict;
  Verdict relaxation_verdict = Verdict::Pass;
  std::optional<PositiveCycle> cycle;
};

/// Runs both deciders and compares them on the range (a) covers; a
/// disagreement throws Error("oracle mismatch").
CyclicMonotoneReport alpha_cyclic_monotone(const MultiMap& phi, const Modulus& alpha, std::size_t max_cycle_len,
                                           double tol = kDefaultTolerance);

/// Raised by reconstruct when the chain sums are unbounded.
class PositiveCycleError : public EvaluationError {
 public:
  explicit PositiveCycleError(PositiveCycle cycle);
  const PositiveCycle& cycle() const noexcept { return cycle_; }

 private:
  PositiveCycle cycle_;
};

struct Reconstruction {
  std::size_t base_index = 0;
  std::vector<Scalar> values;  // f at each carrier point, f(base) = 0
  bool verified_subgradient = false;
  std::optional<Witness> violation;  // first failed subgradient inequality
  FunctionOracle function;           // tabulated on the carrier, no interpolation
};

/// f(x_i) = sup over chains base -> ... -> x_i of the summed edge gains,
/// the empty chain counting 0 at the base. Throws PositiveCycleError when
/// Phi is not alpha-cyclically monotone.
Reconstruction reconstruct(const MultiMap& phi, const Modulus& alpha, std::size_t base_index,
                           double tol = kDefaultTolerance);

}  // namespace alphaconv
