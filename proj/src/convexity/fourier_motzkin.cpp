#include <algorithm>
#include <map>
#include <optional>

#include "alphaconv/errors.hpp"
#include "alphaconv/fourier_motzkin.hpp"

namespace alphaconv {

namespace {

struct Row {
  std::vector<mpq_class> a;
  mpq_class b;
  std::map<std::size_t, mpq_class> hist;  // original index -> multiplier
};

bool all_zero(const std::vector<mpq_class>& a) {
  return std::all_of(a.begin(), a.end(), [](const mpq_class& v) { return sgn(v) == 0; });
}

// Scales a nonzero row so that max |a_j| = 1.
void normalize(Row& r) {
  mpq_class m = 0;
  for (const auto& v : r.a) m = std::max<mpq_class>(m, abs(v));
  if (m == 0 || m == 1) return;
  for (auto& v : r.a) v /= m;
  r.b /= m;
  for (auto& [i, lambda] : r.hist) lambda /= m;
}

// Keeps one row per direction, the one with the smallest right-hand side.
std::vector<Row> prune_parallel(std::vector<Row> rows) {
  std::map<std::vector<mpq_class>, std::size_t> best;
  std::vector<Row> out;
  for (auto& r : rows) {
    auto [it, inserted] = best.try_emplace(r.a, out.size());
    if (inserted) {
      out.push_back(std::move(r));
    } else if (r.b < out[it->second].b) {
      out[it->second] = std::move(r);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, mpq_class>> certificate_of(const Row& r) {
  return {r.hist.begin(), r.hist.end()};
}

}  // namespace

FourierMotzkinResult fourier_motzkin(const std::vector<LinearConstraint>& system, std::size_t dim,
                                     std::size_t row_budget) {
  FourierMotzkinResult result;
  if (dim == 0) throw EvaluationError("Fourier-Motzkin needs at least one variable");

  std::vector<Row> rows;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& c = system[i];
    if (c.a.size() != dim) throw EvaluationError("constraint " + std::to_string(i) + " has the wrong dimension");
    if (all_zero(c.a)) {
      if (sgn(c.b) < 0) {
        result.certificate = {{i, mpq_class(1)}};
        return result;
      }
      continue;
    }
    Row r{c.a, c.b, {{i, mpq_class(1)}}};
    normalize(r);
    rows.push_back(std::move(r));
  }
  rows = prune_parallel(std::move(rows));
  result.peak_rows = rows.size();

  // levels[k] holds the system in variables 0..k, before k is eliminated.
  std::vector<std::vector<Row>> levels(dim);
  for (std::size_t step = 0; step < dim; ++step) {
    const std::size_t k = dim - 1 - step;
    levels[k] = rows;

    std::vector<const Row*> pos, neg;
    std::vector<Row> next;
    for (const auto& r : rows) {
      const int s = sgn(r.a[k]);
      if (s > 0) pos.push_back(&r);
      else if (s < 0) neg.push_back(&r);
      else next.push_back(r);
    }
    if (pos.size() * neg.size() + next.size() > row_budget)
      throw EvaluationError("Fourier-Motzkin row budget exceeded (" + std::to_string(pos.size() * neg.size()) +
                            " combinations)");

    const std::size_t history_cap = step + 2;  // eliminated count + 1
    for (const Row* p : pos) {
      for (const Row* n : neg) {
        const mpq_class lp = -n->a[k];  // > 0
        const mpq_class ln = p->a[k];   // > 0
        Row r;
        r.a.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) r.a[j] = lp * p->a[j] + ln * n->a[j];
        r.a[k] = 0;
        r.b = lp * p->b + ln * n->b;
        r.hist = p->hist;
        for (auto& [i, v] : r.hist) v *= lp;
        for (const auto& [i, v] : n->hist) r.hist[i] += ln * v;
        if (r.hist.size() > history_cap) continue;
        if (all_zero(r.a)) {
          if (sgn(r.b) < 0) {
            result.certificate = certificate_of(r);
            return result;
          }
          continue;
        }
        normalize(r);
        next.push_back(std::move(r));
      }
    }
    // No parallel pruning here: the history cap relies on every small-support
    // combination surviving, and dropping a looser duplicate breaks that.
    rows = std::move(next);
    result.peak_rows = std::max(result.peak_rows, rows.size());
  }

  result.feasible = true;
  result.solution.assign(dim, mpq_class(0));
  for (std::size_t k = 0; k < dim; ++k) {
    std::optional<mpq_class> lo, hi;
    for (const auto& r : levels[k]) {
      const int s = sgn(r.a[k]);
      if (s == 0) continue;
      mpq_class rhs = r.b;
      for (std::size_t j = 0; j < k; ++j) rhs -= r.a[j] * result.solution[j];
      const mpq_class bound = rhs / r.a[k];
      if (s > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (lo && hi) {
      if (*hi < *lo) throw Error("Fourier-Motzkin back-substitution found an empty interval");
      result.solution[k] = (*lo + *hi) / 2;
    } else {
      result.bounded = false;
      if (lo) result.solution[k] = *lo;
      else if (hi) result.solution[k] = *hi;
    }
  }
  return result;
}

}  // namespace alphaconv
