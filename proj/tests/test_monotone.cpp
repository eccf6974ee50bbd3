#include <random>

#include "alphaconv/errors.hpp"
#include "alphaconv/monotone.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace alphaconv;

namespace {

Scalar q(long num, long den = 1) { return Scalar::ratio(num, den, Mode::Exact); }
Point p1(const Scalar& s) { return Point({s}); }
LinearFunctional lf(const Scalar& s) { return LinearFunctional(p1(s)); }

// The same data in both representations.
struct Sample {
  MultiMap map;
  oracle::RawMap raw;
};

Sample from_raw(const oracle::RawMap& raw) {
  std::vector<Point> carrier;
  std::vector<std::vector<LinearFunctional>> values;
  for (std::size_t i = 0; i < raw.x.size(); ++i) {
    std::vector<Scalar> xs;
    for (const auto& v : raw.x[i]) xs.emplace_back(v);
    carrier.emplace_back(xs);
    values.emplace_back();
    for (const auto& phi : raw.phi[i]) {
      std::vector<Scalar> ps;
      for (const auto& v : phi) ps.emplace_back(v);
      values.back().emplace_back(Point(ps));
    }
  }
  return {MultiMap(carrier, values), raw};
}

// Gradients of c |x|^2 at distinct random points, each functional jittered by
// up to `noise`. Small noise keeps most maps monotone; large noise breaks them.
oracle::RawMap random_map(std::mt19937_64& rng, std::size_t n, std::size_t dim, std::size_t per_point,
                          long noise_den) {
  oracle::RawMap m;
  while (m.x.size() < n) {
    oracle::Vec x;
    for (std::size_t j = 0; j < dim; ++j) x.push_back(oracle::random_rational(rng, -2, 2, 4));
    if (std::find(m.x.begin(), m.x.end(), x) != m.x.end()) continue;
    m.x.push_back(x);
    m.phi.emplace_back();
    for (std::size_t c = 0; c < per_point; ++c) {
      oracle::Vec g;
      for (const auto& v : x) g.push_back(2 * v + oracle::random_rational(rng, -1, 1, noise_den));
      m.phi.back().push_back(g);
    }
  }
  return m;
}

bool pairwise_oracle(const oracle::RawMap& m, const oracle::AlphaFn& alpha) {
  for (std::size_t i = 0; i < m.x.size(); ++i)
    for (std::size_t j = 0; j < m.x.size(); ++j)
      for (std::size_t a = 0; a < m.phi[i].size(); ++a)
        for (std::size_t b = 0; b < m.phi[j].size(); ++b)
          if (oracle::step_gain(m, alpha, i, a, j) + oracle::step_gain(m, alpha, j, b, i) > 0) return false;
  return true;
}

}  // namespace

TEST_CASE("multimap validation") {
  CHECK_THROWS_AS(MultiMap({p1(q(0)), p1(q(0))}, {{lf(q(1))}, {lf(q(1))}}), EvaluationError);
  CHECK_THROWS_AS(MultiMap({p1(q(0))}, {{}}), EvaluationError);
  CHECK_THROWS_AS(MultiMap({p1(q(0)), p1(q(1))}, {{lf(q(1))}}), EvaluationError);
  CHECK_THROWS_AS(MultiMap({p1(q(0)), Point({q(1), q(1)})}, {{lf(q(1))}, {lf(q(1))}}), EvaluationError);
  CHECK_THROWS_AS(MultiMap({p1(q(0))}, {{lf(Scalar(1.0))}}), EvaluationError);
}

TEST_CASE("alpha-monotonicity examples") {
  std::vector<Point> xs;
  std::vector<std::vector<LinearFunctional>> grads;
  for (long k = -3; k <= 3; ++k) {
    xs.push_back(p1(q(k, 3)));
    grads.push_back({lf(q(2 * k, 3))});
  }
  const MultiMap twice(xs, grads);
  // 2x(y - x) + 2y(x - y) + 2 (y - x)^2 = 0: every pair is tight.
  CHECK(alpha_monotone(twice, Modulus::quadratic(q(1))).passed());
  CHECK(alpha_monotone(twice, Modulus::zero()).passed());
  const auto r = alpha_monotone(twice, Modulus::quadratic(q(2)));
  REQUIRE_FALSE(r.passed());
  CHECK(r.witness->lhs > r.witness->rhs);
  CHECK_THROWS(alpha_monotone(MultiMap({p1(q(0))}, {{lf(q(1))}}), Modulus::zero()));
}

TEST_CASE("pairwise check agrees with a direct enumeration") {
  std::mt19937_64 rng(53);
  int pass = 0, fail = 0;
  for (int i = 0; i < 120; ++i) {
    const auto s = from_raw(random_map(rng, 2 + i % 5, 1 + i % 2, 1 + i % 3, 1 + i % 4));
    const mpq_class c = i % 3 == 0 ? mpq_class(0) : mpq_class(1, 1 + i % 4);
    const Modulus alpha = c == 0 ? Modulus::zero() : Modulus::quadratic(Scalar(c));
    const bool want = pairwise_oracle(s.raw, c == 0 ? oracle::zero_alpha() : oracle::quadratic_alpha(c));
    CHECK(alpha_monotone(s.map, alpha).passed() == want);
    (want ? pass : fail)++;
  }
  CHECK(pass > 10);
  CHECK(fail > 10);
}

TEST_CASE("cyclic monotonicity: both deciders match the permutation oracle") {
  std::mt19937_64 rng(59);
  int pass = 0, fail = 0;
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 2 + i % 5;
    const auto s = from_raw(random_map(rng, n, 1 + i % 2, 1 + (i / 5) % 2, 2 + i % 6));
    const mpq_class c = i % 4 == 0 ? mpq_class(0) : mpq_class(1, 2 + i % 3);
    const Modulus alpha = c == 0 ? Modulus::zero() : Modulus::quadratic(Scalar(c));
    const auto raw_alpha = c == 0 ? oracle::zero_alpha() : oracle::quadratic_alpha(c);
    const bool positive = oracle::has_positive_cycle(s.raw, raw_alpha, n);
    const auto report = alpha_cyclic_monotone(s.map, alpha, n);
    CHECK(report.exhaustive_ran);
    CHECK(report.check.passed() == !positive);
    CHECK((report.relaxation_verdict == Verdict::Fail) == positive);
    if (positive) {
      ++fail;
      REQUIRE(report.cycle.has_value());
      // Recompute the reported cycle sum with the reported choices.
      const auto& cyc = *report.cycle;
      mpq_class sum = 0;
      for (std::size_t k = 0; k < cyc.nodes.size(); ++k)
        sum += oracle::step_gain(s.raw, raw_alpha, cyc.nodes[k], cyc.choices[k],
                                 cyc.nodes[(k + 1) % cyc.nodes.size()]);
      CHECK(sum > 0);
      CHECK(sum == cyc.weight.rational());
    } else {
      ++pass;
      CHECK(alpha_monotone(s.map, alpha).passed());  // cyclic implies pairwise
      if (c != 0) CHECK(alpha_cyclic_monotone(s.map, Modulus::zero(), n).check.passed());
    }
  }
  CHECK(pass > 20);
  CHECK(fail > 20);
}

TEST_CASE("cycle length cap on the exhaustive decider") {
  // Rotation by a quarter turn: pairs sum to exactly 0, while a triangle
  // traversed one way sums to twice its area.
  oracle::RawMap m;
  m.x = {{1, 0}, {0, 1}, {-1, 0}};
  m.phi = {{{0, 1}}, {{-1, 0}}, {{0, -1}}};
  const auto s = from_raw(m);
  const auto raw_alpha = oracle::zero_alpha();
  REQUIRE(oracle::has_positive_cycle(m, raw_alpha, 3) != oracle::has_positive_cycle(m, raw_alpha, 2));
  const auto short_only = find_positive_cycle_exhaustive(s.map, Modulus::zero(), 2);
  REQUIRE(short_only.has_value());
  CHECK_FALSE(short_only->has_value());
  const auto full = find_positive_cycle_exhaustive(s.map, Modulus::zero(), 3);
  REQUIRE(full.has_value());
  CHECK(full->has_value());
  // The relaxation sees every length.
  CHECK(find_positive_cycle_relaxation(ChainGraph(s.map, Modulus::zero()), Mode::Exact).has_value());
  CHECK_FALSE(alpha_cyclic_monotone(s.map, Modulus::zero(), 2).check.passed());
}

TEST_CASE("exhaustive decider steps aside on large carriers") {
  std::vector<Point> xs;
  std::vector<std::vector<LinearFunctional>> grads;
  for (long k = 0; k < 14; ++k) {
    xs.push_back(p1(q(k, 7)));
    grads.push_back({lf(q(2 * k, 7))});
  }
  const MultiMap big(xs, grads);
  CHECK_FALSE(find_positive_cycle_exhaustive(big, Modulus::quadratic(q(1)), 14).has_value());
  const auto r = alpha_cyclic_monotone(big, Modulus::quadratic(q(1)), 14);
  CHECK_FALSE(r.exhaustive_ran);
  CHECK(r.check.passed());
}

TEST_CASE("float mode treats zero-weight cycles as non-positive") {
  std::vector<Point> xs;
  std::vector<std::vector<LinearFunctional>> grads;
  for (double v : {-0.7, -0.1, 0.3, 0.9, 1.3}) {
    xs.push_back(Point({Scalar(v)}));
    grads.push_back({LinearFunctional(Point({Scalar(2 * v)}))});
  }
  const MultiMap tight(xs, grads);
  // Every cycle of x -> 2x under |u|^2 sums to zero up to rounding.
  const auto r = alpha_cyclic_monotone(tight, Modulus::quadratic(Scalar(1.0)), 5);
  CHECK(r.check.passed());
  CHECK(r.exhaustive_verdict == Verdict::Pass);
  CHECK_FALSE(alpha_cyclic_monotone(tight, Modulus::quadratic(Scalar(1.1)), 5).check.passed());
}

TEST_CASE("reconstruction matches the chain supremum") {
  std::mt19937_64 rng(61);
  int checked = 0;
  for (int i = 0; i < 80 && checked < 25; ++i) {
    const std::size_t n = 2 + i % 4;
    const auto raw = random_map(rng, n, 1 + i % 2, 1 + i % 2, 3 + i % 5);
    const auto s = from_raw(raw);
    const mpq_class c = i % 2 == 0 ? mpq_class(0) : mpq_class(1, 4);
    const Modulus alpha = c == 0 ? Modulus::zero() : Modulus::quadratic(Scalar(c));
    const auto raw_alpha = c == 0 ? oracle::zero_alpha() : oracle::quadratic_alpha(c);
    const std::size_t base = static_cast<std::size_t>(i) % n;
    if (oracle::has_positive_cycle(raw, raw_alpha, n)) {
      CHECK_THROWS_AS(reconstruct(s.map, alpha, base), PositiveCycleError);
      continue;
    }
    ++checked;
    const auto r = reconstruct(s.map, alpha, base);
    CHECK(r.verified_subgradient);
    CHECK(r.values[base] == q(0));
    for (std::size_t t = 0; t < n; ++t) {
      // Without positive cycles, simple paths (at most n - 1 steps) attain the sup.
      const auto want = oracle::chain_sup(raw, raw_alpha, base, t, n - 1);
      REQUIRE(want.has_value());
      CHECK(r.values[t].rational() == *want);
      CHECK(r.function(s.map.carrier()[t]) == r.values[t]);
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("reconstruction round trip for x^2") {
  std::vector<Point> xs;
  std::vector<std::vector<LinearFunctional>> grads;
  for (long k = -4; k <= 4; ++k) {
    xs.push_back(p1(q(k, 4)));
    grads.push_back({lf(q(k, 2))});
  }
  const MultiMap m(xs, grads);
  const auto r = reconstruct(m, Modulus::quadratic(q(1)), 2);  // base x = -1/2
  CHECK(r.verified_subgradient);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(r.values[i] == xs[i][0] * xs[i][0] - q(1, 4));
}

TEST_CASE("reconstruction with the zero modulus on three points") {
  const MultiMap m({p1(q(-1)), p1(q(0)), p1(q(1))}, {{lf(q(-2))}, {lf(q(0))}, {lf(q(2))}});
  const auto r = reconstruct(m, Modulus::zero(), 1);
  // Direct chains from 0 gain 0 * (+-1); detours only lose.
  CHECK(r.values == std::vector<Scalar>{q(0), q(0), q(0)});
  CHECK(r.verified_subgradient);
}

TEST_CASE("reconstruction refuses maps with a positive cycle") {
  const MultiMap m({p1(q(-1)), p1(q(1))}, {{lf(q(2))}, {lf(q(-2))}});
  try {
    reconstruct(m, Modulus::zero(), 0);
    FAIL("expected PositiveCycleError");
  } catch (const PositiveCycleError& e) {
    const auto& c = e.cycle();
    CHECK(c.weight > q(0));
    CHECK(ChainGraph(m, Modulus::zero()).cycle_weight(c.nodes) == c.weight);
  }
  CHECK_THROWS(reconstruct(m, Modulus::zero(), 5));
}

TEST_CASE("one-dimensional subdifferential") {
  const BoxDomain dom(p1(q(-1)), p1(q(1)));
  const auto kink = subdiff_1d(FunctionOracle::abs_val(), dom, p1(q(0)));
  REQUIRE(kink.lo.has_value());
  REQUIRE(kink.hi.has_value());
  CHECK(*kink.lo == q(-1));
  CHECK(*kink.hi == q(1));

  const auto smooth = subdiff_1d(FunctionOracle::scaled_norm_squared(1, q(1)), dom, p1(q(1, 2)));
  CHECK(*smooth.lo <= q(1));
  CHECK(*smooth.hi >= q(1));
  CHECK((*smooth.hi - *smooth.lo) <= q(2) * smooth.resolution);

  const auto concave = FunctionOracle::quadratic_form({{q(-1)}}, p1(q(0)), q(0));
  CHECK_THROWS_AS(subdiff_1d(concave, dom, p1(q(0))), NonConvexOracle);
  CHECK_THROWS(subdiff_1d(FunctionOracle::abs_val(), BoxDomain(Point({q(-1), q(-1)}), Point({q(1), q(1)})),
                          Point({q(0), q(0)})));
}

TEST_CASE("strengthened subgradient check") {
  const BoxDomain dom(p1(q(-1)), p1(q(1)));
  const auto sq = FunctionOracle::scaled_norm_squared(1, q(1));
  std::vector<Point> sample;
  for (long k = -4; k <= 4; ++k) sample.push_back(p1(q(k, 5)));
  CHECK(check_strengthened_subgradient(sq, Modulus::quadratic(q(1)), dom, p1(q(1, 2)), lf(q(1)), sample).passed());
  const auto off = check_strengthened_subgradient(sq, Modulus::quadratic(q(1)), dom, p1(q(1, 2)), lf(q(11, 10)), sample);
  REQUIRE_FALSE(off.passed());
  const Point& y = *off.witness->y;
  // Independent recomputation: y^2 >= 1/4 + 11/10 (y - 1/2) + (y - 1/2)^2 must fail at the witness.
  const mpq_class yv = y[0].rational();
  CHECK(yv * yv < mpq_class(1, 4) + mpq_class(11, 10) * (yv - mpq_class(1, 2)) +
                      (yv - mpq_class(1, 2)) * (yv - mpq_class(1, 2)));
}
