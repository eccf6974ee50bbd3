#pragma once

// Reference computations for the tests. They work on raw mpq_class vectors
// and doubles and share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Vec = std::vector<mpq_class>;
using AlphaFn = std::function<mpq_class(const Vec&)>;

inline Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline mpq_class dot(const Vec& a, const Vec& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline AlphaFn zero_alpha() {
  return [](const Vec&) { return mpq_class(0); };
}

inline AlphaFn quadratic_alpha(mpq_class c) {
  return [c](const Vec& u) -> mpq_class { return c * dot(u, u); };
}

/// max_{1 <= n <= N} n^2 sin^2(u / n), in long double.
inline long double jensen_sup_sinsq(long double u, int n_max) {
  long double best = 0;
  for (int n = 1; n <= n_max; ++n) {
    const long double s = std::sin(u / n);
    best = std::max(best, static_cast<long double>(n) * n * s * s);
  }
  return best;
}

struct RawMap {
  std::vector<Vec> x;
  std::vector<std::vector<Vec>> phi;  // functionals per carrier point
};

/// Gain of the step x_i -> x_j using the c-th functional at x_i.
inline mpq_class step_gain(const RawMap& m, const AlphaFn& alpha, std::size_t i, std::size_t c, std::size_t j) {
  const Vec h = sub(m.x[j], m.x[i]);
  return dot(m.phi[i][c], h) + alpha(h);
}

/// True when some cycle over distinct nodes (self-loops included) of length
/// <= max_len has a positive sum for some per-node functional choice.
/// Enumerates node subsets by bitmask and their orderings by permutation.
inline bool has_positive_cycle(const RawMap& m, const AlphaFn& alpha, std::size_t max_len) {
  const std::size_t n = m.x.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    if (nodes.size() > max_len) continue;
    // Fix the first node, permute the rest.
    std::vector<std::size_t> rest(nodes.begin() + 1, nodes.end());
    do {
      std::vector<std::size_t> cyc{nodes.front()};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      std::vector<std::size_t> pick(cyc.size(), 0);
      while (true) {
        mpq_class sum = 0;
        for (std::size_t k = 0; k < cyc.size(); ++k)
          sum += step_gain(m, alpha, cyc[k], pick[k], cyc[(k + 1) % cyc.size()]);
        if (sum > 0) return true;
        std::size_t k = 0;
        while (k < cyc.size() && ++pick[k] == m.phi[cyc[k]].size()) pick[k++] = 0;
        if (k == cyc.size()) break;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return false;
}

/// sup over chains base = y_0 -> y_1 -> ... -> y_m = target with m <= max_len
/// (nodes may repeat) of the summed best step gains; the empty chain gives 0
/// at the base. Plain recursion over all sequences.
inline std::optional<mpq_class> chain_sup(const RawMap& m, const AlphaFn& alpha, std::size_t base,
                                          std::size_t target, std::size_t max_len) {
  std::optional<mpq_class> best;
  if (base == target) best = mpq_class(0);
  std::function<void(std::size_t, mpq_class, std::size_t)> walk = [&](std::size_t at, mpq_class acc,
                                                                      std::size_t depth) {
    if (depth == max_len) return;
    for (std::size_t j = 0; j < m.x.size(); ++j) {
      for (std::size_t c = 0; c < m.phi[at].size(); ++c) {
        const mpq_class next = acc + step_gain(m, alpha, at, c, j);
        if (j == target && (!best || next > *best)) best = next;
        walk(j, next, depth + 1);
      }
    }
  };
  walk(base, mpq_class(0), 0);
  return best;
}

/// Random rational in [lo, hi] with denominator den.
inline mpq_class random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> d(lo * den, hi * den);
  mpq_class q(d(rng), den);
  q.canonicalize();
  return q;
}

/// d = 1 support slopes: [max_{x<x0} s(x), min_{x>x0} s(x)] with
/// s(x) = (f(x) - f(x0) - alpha(x - x0)) / (x - x0). Empty optional ends are
/// unbounded; the pair (lo > hi) signals infeasibility.
struct SlopeInterval {
  std::optional<mpq_class> lo;
  std::optional<mpq_class> hi;
};

inline SlopeInterval slope_interval(const std::function<mpq_class(const mpq_class&)>& f,
                                    const std::function<mpq_class(const mpq_class&)>& alpha, const mpq_class& x0,
                                    const std::vector<mpq_class>& sample) {
  SlopeInterval s;
  for (const auto& x : sample) {
    if (x == x0) continue;
    const mpq_class slope = (f(x) - f(x0) - alpha(x - x0)) / (x - x0);
    if (x < x0) {
      if (!s.lo || slope > *s.lo) s.lo = slope;
    } else {
      if (!s.hi || slope < *s.hi) s.hi = slope;
    }
  }
  return s;
}

}  // namespace oracle
