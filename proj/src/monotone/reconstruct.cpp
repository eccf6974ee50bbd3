#include "alphaconv/monotone.hpp"

namespace alphaconv {

Reconstruction reconstruct(const MultiMap& phi, const Modulus& alpha, std::size_t base_index, double tol) {
  const std::size_t n = phi.size();
  if (base_index >= n)
    throw EvaluationError("base_index " + std::to_string(base_index) + " is outside the carrier (size " +
                          std::to_string(n) + ")");
  const Mode mode = phi.mode();
  const ChainGraph graph(phi, alpha);
  if (auto cycle = find_positive_cycle_relaxation(graph, mode, tol)) throw PositiveCycleError(std::move(*cycle));

  // Longest chain gains from the base. The empty chain gives 0 at the base;
  // the graph is complete, so one step reaches every other node.
  std::vector<std::optional<Scalar>> dist(n);
  dist[base_index] = Scalar::integer(0, mode);
  for (std::size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!dist[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        Scalar cand = *dist[i] + graph.weight(i, j);
        if (!dist[j] || *dist[j] < cand) {
          dist[j] = std::move(cand);
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  if (n == 1) dist[0] = Scalar::integer(0, mode);

  std::vector<Scalar> values;
  values.reserve(n);
  for (auto& d : dist) values.push_back(std::move(*d));

  // Phi(x) lies in the alpha-strengthened subdifferential of the result.
  bool verified = true;
  std::optional<Witness> violation;
  const auto& xs = phi.carrier();
  for (std::size_t i = 0; i < n && verified; ++i) {
    for (std::size_t j = 0; j < n && verified; ++j) {
      const Point h = xs[j] - xs[i];
      const Scalar a = alpha(h);
      for (const auto& f : phi.values()[i]) {
        const Scalar lhs = values[i] + f(h) + a;
        if (!leq_within(lhs, values[j], tol)) {
          verified = false;
          violation = Witness{xs[i], xs[j], std::nullopt, lhs, values[j], {{"phi", f.vector()}}};
          break;
        }
      }
    }
  }

  return Reconstruction{
      .base_index = base_index,
      .values = values,
      .verified_subgradient = verified,
      .violation = std::move(violation),
      .function = FunctionOracle::tabulated(SampleTable(xs, values, Interpolation::None, tol)),
  };
}

}  // namespace alphaconv
