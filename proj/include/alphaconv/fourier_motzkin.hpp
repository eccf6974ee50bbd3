#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace alphaconv {

/// One inequality a . x <= b over the rationals.
struct LinearConstraint {
  std::vector<mpq_class> a;
  mpq_class b;
};

struct FourierMotzkinResult {
  bool feasible = false;
  bool bounded = true;              // every coordinate had both a lower and an upper bound
  std::vector<mpq_class> solution;  // present when feasible
  /// Farkas multipliers (constraint index, lambda >= 0): sum lambda a = 0 and
  /// sum lambda b < 0. Present when infeasible.
  std::vector<std::pair<std::size_t, mpq_class>> certificate;
  std::size_t peak_rows = 0;
};

inline constexpr std::size_t kDefaultRowBudget = 2'000'000;

/// Exact variable elimination, last variable first. Parallel input rows keep
/// the tightest bound and derived rows combining more originals than Imbert's
/// bound allows are dropped. Back-substitution picks the midpoint of each final
/// interval, the single finite bound when only one exists, and 0 otherwise.
FourierMotzkinResult fourier_motzkin(const std::vector<LinearConstraint>& system, std::size_t dim,
                                     std::size_t row_budget = kDefaultRowBudget);

}  // namespace alphaconv
