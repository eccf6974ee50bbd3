#include <algorithm>

#include "alphaconv/monotone.hpp"

namespace alphaconv {

namespace {

// Per-edge tolerance: a cycle of length L counts as positive only when its
// sum exceeds L * tol, so sums sitting at zero up to rounding stay monotone.
Scalar edge_margin(Mode mode, double tol) {
  return mode == Mode::Float ? Scalar::from_double(tol, mode) : Scalar::integer(0, mode);
}

}  // namespace

ChainGraph::ChainGraph(const MultiMap& phi, const Modulus& alpha) {
  const auto& xs = phi.carrier();
  const std::size_t n = xs.size();
  weights_.assign(n, std::vector<Scalar>(n));
  choices_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Point h = xs[j] - xs[i];
      const Scalar a = alpha(h);
      const auto& fs = phi.values()[i];
      std::size_t best = 0;
      Scalar best_value = fs[0](h) + a;
      for (std::size_t c = 1; c < fs.size(); ++c) {
        Scalar v = fs[c](h) + a;
        if (best_value < v) best_value = std::move(v), best = c;
      }
      weights_[i][j] = std::move(best_value);
      choices_[i][j] = best;
    }
  }
}

Scalar ChainGraph::cycle_weight(const std::vector<std::size_t>& cycle) const {
  Scalar sum = Scalar::integer(0, weights_[cycle.front()][cycle.front()].mode());
  for (std::size_t k = 0; k < cycle.size(); ++k) sum += weights_[cycle[k]][cycle[(k + 1) % cycle.size()]];
  return sum;
}

std::optional<std::optional<PositiveCycle>> find_positive_cycle_exhaustive(const MultiMap& phi, const Modulus& alpha,
                                                                           std::size_t max_cycle_len, double tol) {
  const std::size_t n = phi.size();
  if (n > kExhaustiveCarrierLimit || max_cycle_len == 0) return std::nullopt;
  const Mode mode = phi.mode();
  const auto& xs = phi.carrier();
  const Scalar margin = edge_margin(mode, tol);

  // gain[i][c][j] = phi_c(x_j - x_i) + alpha(x_j - x_i) for the c-th functional at x_i.
  std::vector<std::vector<std::vector<Scalar>>> gain(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fs = phi.values()[i];
    gain[i].assign(fs.size(), std::vector<Scalar>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const Point h = xs[j] - xs[i];
      const Scalar a = alpha(h);
      for (std::size_t c = 0; c < fs.size(); ++c) gain[i][c][j] = fs[c](h) + a;
    }
  }

  std::size_t work = 0;
  bool over_budget = false;
  std::optional<PositiveCycle> found;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  // Every choice combination along a closed cycle; a mixed-radix counter
  // over the value lists keeps the per-node quantifier explicit.
  auto try_cycle = [&]() {
    const std::size_t len = path.size();
    std::vector<std::size_t> pick(len, 0);
    const Scalar threshold = Scalar::integer(static_cast<long>(len), mode) * margin;
    while (true) {
      if (++work > kExhaustiveWorkBudget) {
        over_budget = true;
        return;
      }
      Scalar sum = Scalar::integer(0, mode);
      for (std::size_t k = 0; k < len; ++k) sum += gain[path[k]][pick[k]][path[(k + 1) % len]];
      if (threshold < sum) {
        found = PositiveCycle{path, pick, sum};
        return;
      }
      std::size_t k = 0;
      while (k < len && ++pick[k] == phi.values()[path[k]].size()) pick[k++] = 0;
      if (k == len) return;
    }
  };

  // Simple cycles whose smallest node is the start; every closed walk splits
  // into such cycles, so nothing positive is missed within the length bound.
  auto extend = [&](auto& self) -> void {
    try_cycle();
    if (found || over_budget || path.size() == max_cycle_len) return;
    for (std::size_t v = path.front() + 1; v < n; ++v) {
      if (on_path[v]) continue;
      path.push_back(v);
      on_path[v] = true;
      self(self);
      on_path[v] = false;
      path.pop_back();
      if (found || over_budget) return;
    }
  };

  for (std::size_t s = 0; s < n && !found && !over_budget; ++s) {
    path = {s};
    on_path[s] = true;
    extend(extend);
    on_path[s] = false;
  }
  if (over_budget) return std::nullopt;
  return std::optional<std::optional<PositiveCycle>>(std::in_place, std::move(found));
}

std::optional<PositiveCycle> find_positive_cycle_relaxation(const ChainGraph& graph, Mode mode, double tol) {
  const std::size_t n = graph.size();
  const Scalar margin = edge_margin(mode, tol);
  // All distances start at 0, as if a virtual source fed every node.
  std::vector<Scalar> dist(n, Scalar::integer(0, mode));
  std::vector<std::size_t> pred(n, n);

  std::optional<std::size_t> relaxed;
  for (std::size_t round = 0; round <= n; ++round) {
    relaxed.reset();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar cand = dist[i] + graph.weight(i, j) - margin;
        if (dist[j] < cand) {
          dist[j] = std::move(cand);
          pred[j] = i;
          relaxed = j;
        }
      }
    }
    if (!relaxed) return std::nullopt;
  }

  // Still relaxing after n + 1 rounds: walk back n steps to land on the cycle.
  std::size_t v = *relaxed;
  for (std::size_t k = 0; k < n; ++k) {
    v = pred[v];
    if (v == n) throw Error("relaxation lost the predecessor chain");
  }
  std::vector<std::size_t> cycle;
  std::size_t u = v;
  do {
    cycle.push_back(u);
    u = pred[u];
  } while (u != v);
  std::reverse(cycle.begin(), cycle.end());

  PositiveCycle pc;
  pc.nodes = cycle;
  for (std::size_t k = 0; k < cycle.size(); ++k) pc.choices.push_back(graph.choice(cycle[k], cycle[(k + 1) % cycle.size()]));
  pc.weight = graph.cycle_weight(cycle);
  return pc;
}

CyclicMonotoneReport alpha_cyclic_monotone(const MultiMap& phi, const Modulus& alpha, std::size_t max_cycle_len,
                                           double tol) {
  if (max_cycle_len == 0) throw EvaluationError("max_cycle_len must be >= 1");
  const Mode mode = phi.mode();
  const std::size_t n = phi.size();
  const ChainGraph graph(phi, alpha);

  CyclicMonotoneReport r;
  r.check.mode = mode;
  r.check.tolerance = mode == Mode::Float ? tol : 0.0;
  r.check.samples_checked = n * n;
  r.cycle = find_positive_cycle_relaxation(graph, mode, tol);
  r.relaxation_verdict = r.cycle ? Verdict::Fail : Verdict::Pass;

  if (auto a = find_positive_cycle_exhaustive(phi, alpha, max_cycle_len, tol)) {
    r.exhaustive_ran = true;
    r.exhaustive_verdict = a->has_value() ? Verdict::Fail : Verdict::Pass;
    const bool covered = max_cycle_len >= n || (r.cycle && r.cycle->nodes.size() <= max_cycle_len);
    if ((a->has_value() && !r.cycle) || (!a->has_value() && r.cycle && covered))
      throw Error("oracle mismatch: exhaustive enumeration says " +
                  std::string(to_string(*r.exhaustive_verdict)) + ", relaxation says " +
                  std::string(to_string(r.relaxation_verdict)));
  } else {
    r.check.notes.push_back("exhaustive decider skipped (carrier or work budget)");
  }

  r.check.verdict = r.relaxation_verdict;
  if (r.cycle) {
    const auto& xs = phi.carrier();
    Witness w{xs[r.cycle->nodes.front()], std::nullopt, std::nullopt, r.cycle->weight,
              Scalar::integer(static_cast<long>(r.cycle->nodes.size()), mode) * edge_margin(mode, tol), {}};
    for (std::size_t k = 0; k < r.cycle->nodes.size(); ++k) {
      const std::size_t node = r.cycle->nodes[k];
      w.extra.emplace_back("cycle_point", xs[node]);
      w.extra.emplace_back("functional", phi.values()[node][r.cycle->choices[k]].vector());
    }
    r.check.witness = std::move(w);
  }
  return r;
}

PositiveCycleError::PositiveCycleError(PositiveCycle cycle)
    : EvaluationError("multimap is not alpha-cyclically monotone: positive cycle of length " +
                      std::to_string(cycle.nodes.size()) + " with sum " + cycle.weight.to_string()),
      cycle_(std::move(cycle)) {}

}  // namespace alphaconv
