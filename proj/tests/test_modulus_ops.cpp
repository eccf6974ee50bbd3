#include <cmath>
#include <random>

#include "alphaconv/errors.hpp"
#include "alphaconv/modulus_ops.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace alphaconv;

namespace {

Scalar q(long num, long den = 1) { return Scalar::ratio(num, den, Mode::Exact); }
Point p1(const Scalar& s) { return Point({s}); }
Point f1(double v) { return Point({Scalar(v)}); }

// |u| on [-1, 1] through linear interpolation of five samples.
Modulus abs_table(Mode mode) {
  std::vector<Point> pts;
  std::vector<Scalar> vals;
  for (long k = -2; k <= 2; ++k) {
    pts.push_back(p1(Scalar::ratio(k, 2, mode)));
    vals.push_back(Scalar::ratio(std::abs(k), 2, mode));
  }
  return Modulus::tabulated(SampleTable(pts, vals, Interpolation::Linear));
}

}  // namespace

TEST_CASE("jensen amplifier: closed form agrees with the brute force for power moduli") {
  for (double p : {1.0, 1.5, 2.0, 2.5, 3.0}) {
    CAPTURE(p);
    const Modulus m = Modulus::power_norm(Scalar(1.0), p);
    for (double u : {0.25, 0.7, 1.0}) {
      const auto closed = amplify_jensen(m, f1(u), 256);
      const auto brute = jensen_brute_force(m, f1(u), 256);
      CHECK(closed.evidence == Evidence::ClosedForm);
      if (p < 2) {
        // n^{2-p} |u|^p grows without bound: the truncated max sits at n = N.
        CHECK(closed.diverges());
        CHECK(brute.argmax->to_double() == 256.0);
        CHECK(brute.value->to_double() == doctest::Approx(std::pow(256.0, 2 - p) * std::pow(u, p)));
      } else {
        CHECK(closed.value->to_double() == doctest::Approx(brute.value->to_double()).epsilon(1e-12));
        if (p > 2) CHECK(brute.argmax->to_double() == 1.0);  // at p = 2 the sequence is flat up to rounding
      }
    }
  }
}

TEST_CASE("scaling amplifier: closed form agrees with the brute force") {
  for (double p : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    CAPTURE(p);
    const Modulus m = Modulus::power_norm(Scalar(2.0), p);
    const auto closed = amplify_scaling(m, f1(0.8));
    const auto brute = scaling_brute_force(m, f1(0.8), FieldSpec{});
    if (p < 1) {
      CHECK(closed.diverges());
      CHECK(brute.argmax->to_double() == std::ldexp(1.0, -40));
    } else {
      CHECK(closed.value->to_double() == doctest::Approx(brute.value->to_double()).epsilon(1e-12));
    }
  }
}

TEST_CASE("sin^2 amplifier matches an independent sup") {
  for (double u : {0.1, 0.5, 1.0, 2.0}) {
    const auto r = amplify_jensen(Modulus::sin_sq(), f1(u), 1000);
    CHECK(r.evidence == Evidence::Numerical);
    CHECK(r.value->to_double() == doctest::Approx(static_cast<double>(oracle::jensen_sup_sinsq(u, 1000))).epsilon(1e-13));
  }
}

TEST_CASE("truncated sup is monotone in N and dominates the base modulus") {
  const Modulus m = Modulus::sin_sq();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int i = 0; i < 50; ++i) {
    const Point u = f1(d(rng));
    double prev = 0;
    for (std::size_t n : {1u, 2u, 8u, 64u, 512u}) {
      const double v = amplify_jensen(m, u, n).value->to_double();
      CHECK(v >= prev);
      prev = v;
    }
    CHECK(prev >= m(u).to_double());
    CHECK(amplify_scaling(m, u).value->to_double() >= m(u).to_double());
  }
}

TEST_CASE("quadratic moduli are fixed points of both amplifiers, exactly") {
  std::mt19937_64 rng(9);
  const Modulus m = Modulus::quadratic(q(3, 7));
  const auto jt = AmplifiedModulus::jensen(m);
  const auto sh = AmplifiedModulus::scaling(m);
  REQUIRE(jt.closed_form().has_value());
  for (int i = 0; i < 100; ++i) {
    const Point u({Scalar(oracle::random_rational(rng, -2, 2, 97)), Scalar(oracle::random_rational(rng, -2, 2, 89))});
    CHECK(*jt.at(u).value == m(u));
    CHECK(*sh.at(u).value == m(u));
    CHECK(*jensen_brute_force(m, u, 50).value == m(u));
  }
}

TEST_CASE("tabulated moduli need the grid points the sup visits") {
  const Modulus coarse = Modulus::tabulated(SampleTable({p1(q(0)), p1(q(1)), p1(q(-1))}, {q(0), q(1), q(1)}));
  CHECK_THROWS_WITH_AS(amplify_jensen(coarse, p1(q(1)), 3), doctest::Contains("grid refinement insufficient"),
                       EvaluationError);
  // With interpolation the table is |u| and the Jensen sup is n |u|.
  const auto r = amplify_jensen(abs_table(Mode::Exact), p1(q(1, 2)), 40);
  CHECK(*r.value == q(20));
}

TEST_CASE("feasibility of power moduli flips at p = 2") {
  const BoxDomain dom(f1(-1), f1(1));
  for (double p : {0.5, 1.0, 1.5, 1.9, 1.99}) {
    CAPTURE(p);
    const auto r = feasibility_check(Modulus::power_norm(Scalar(1.0), p), dom);
    CHECK_FALSE(r.feasible);
    CHECK(r.evidence == Evidence::ClosedForm);
    REQUIRE(r.witness_u.has_value());
    CHECK_FALSE(r.witness_u->is_zero());
  }
  for (double p : {2.0, 2.01, 2.5, 3.0, 4.0}) {
    CAPTURE(p);
    CHECK(feasibility_check(Modulus::power_norm(Scalar(1.0), p), dom).feasible);
  }
  CHECK(feasibility_check(Modulus::quadratic(q(5)), dom.to_mode(Mode::Exact)).feasible);
}

TEST_CASE("numerical feasibility route") {
  const BoxDomain dom(p1(q(-1)), p1(q(1)));
  const auto bad = feasibility_check(abs_table(Mode::Exact), dom, 2000, 100.0);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.evidence == Evidence::Numerical);
  REQUIRE(bad.witness_n.has_value());
  // n |u| first exceeds 100 at the reported n.
  const double u = std::abs(bad.witness_u->coords()[0].to_double());
  CHECK(static_cast<double>(*bad.witness_n) * u > 100.0);
  CHECK(static_cast<double>(*bad.witness_n - 1) * u <= 100.0);
  const auto ok = feasibility_check(Modulus::sin_sq(), dom.to_mode(Mode::Float));
  CHECK(ok.feasible);
  CHECK(ok.evidence == Evidence::Numerical);
}

TEST_CASE("modulus validity") {
  const std::vector<Point> dirs = {f1(1), f1(-1), f1(0.5)};
  CHECK(modulus_validity(Modulus::quadratic(Scalar(2.0)), dirs).valid);
  CHECK(modulus_validity(Modulus::power_norm(Scalar(1.0), 2.0), dirs).valid);
  CHECK(modulus_validity(Modulus::power_norm(Scalar(1.0), 1.5), dirs).valid);
  const auto sin = modulus_validity(Modulus::sin_sq(), dirs);
  CHECK(sin.valid);
  CHECK(sin.evidence == Evidence::Numerical);
  const auto lin = modulus_validity(Modulus::power_norm(Scalar(1.0), 1.0), dirs);
  CHECK_FALSE(lin.valid);
  CHECK(lin.evidence == Evidence::ClosedForm);
  REQUIRE_FALSE(lin.last_terms.empty());
  CHECK(lin.last_terms.back().to_double() == doctest::Approx(1.0));  // eps |h| with h = 1
  CHECK_THROWS(modulus_validity(Modulus::sin_sq(), dirs, 3));
}

TEST_CASE("validity sequence is alpha(2^-k h) 2^k") {
  const auto seq = validity_sequence(Modulus::quadratic(q(1)), p1(q(3)), 4);
  REQUIRE(seq.size() == 5);
  CHECK(seq[0] == q(9));
  CHECK(seq[4] == q(9, 16));
}
