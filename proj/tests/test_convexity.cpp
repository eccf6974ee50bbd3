#include <cmath>
#include <random>

#include "alphaconv/convexity.hpp"
#include "alphaconv/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace alphaconv;

namespace {

Scalar q(long num, long den = 1) { return Scalar::ratio(num, den, Mode::Exact); }
Point p1(const Scalar& s) { return Point({s}); }
Point f1(double v) { return Point({Scalar(v)}); }

FunctionOracle square(Mode mode) { return FunctionOracle::scaled_norm_squared(1, Scalar::integer(1, mode)); }
BoxDomain interval(long lo, long hi, Mode mode = Mode::Exact) {
  return BoxDomain(p1(Scalar::integer(lo, mode)), p1(Scalar::integer(hi, mode)));
}

// Independent re-evaluation of the defining inequality at a witness.
bool violates(const FunctionOracle& f, const Modulus& alpha, const Witness& w, double tol) {
  const Scalar t = *w.t;
  const Scalar s = Scalar::integer(1, t.mode()) - t;
  const Point& x = *w.x;
  const Point& y = *w.y;
  const Scalar lhs = f(t * x + s * y);
  const Scalar rhs = t * f(x) + s * f(y) - t * alpha(s * (x - y)) - s * alpha(t * (y - x));
  return !leq_within(lhs, rhs, tol) && lhs == w.lhs && rhs == w.rhs;
}

}  // namespace

TEST_CASE("x^2 with modulus |u|^2 holds with equality on every t") {
  const auto r = check_strong_convexity(square(Mode::Exact), Modulus::quadratic(q(1)), interval(-2, 2),
                                        TSet::full_interval(11), 8);
  CHECK(r.passed());
  CHECK(r.samples_checked == 8 * 7 * 11);
  CHECK(r.mode == Mode::Exact);
  CHECK(r.tolerance == 0.0);
}

TEST_CASE("x^2 with modulus 2|u|^2 fails with the hand-computed witness") {
  const auto r = check_strong_convexity_on(square(Mode::Exact), Modulus::quadratic(q(2)), {p1(q(0)), p1(q(1))},
                                           TSet::jensen());
  REQUIRE_FALSE(r.passed());
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness->x == p1(q(0)));
  CHECK(*r.witness->y == p1(q(1)));
  CHECK(*r.witness->t == q(1, 2));
  CHECK(r.witness->lhs == q(1, 4));
  CHECK(r.witness->rhs == q(0));
  const auto g = check_strong_convexity(square(Mode::Exact), Modulus::quadratic(q(2)), interval(-2, 2),
                                        TSet::full_interval(11), 8);
  REQUIRE_FALSE(g.passed());
  CHECK(violates(square(Mode::Exact), Modulus::quadratic(q(2)), *g.witness, 0));
}

TEST_CASE("ordinary convexity is the zero-modulus case") {
  for (const auto& t : {TSet::jensen(), TSet::full_interval(5), TSet::field_restricted({FieldKind::Rationals, 11})})
    CHECK(check_strong_convexity(square(Mode::Exact), Modulus::zero(), interval(-2, 2), t, 6).passed());
  CHECK(check_jensen(FunctionOracle::power_abs(q(1), 4), Modulus::zero(), interval(-1, 1), 10).passed());
  CHECK(check_jensen(square(Mode::Float), Modulus::sin_sq(), interval(-2, 2, Mode::Float), 10).passed());
}

TEST_CASE("|x| is not strongly Jensen convex for sin^2") {
  const Modulus alpha = Modulus::sin_sq();
  const auto f = FunctionOracle::abs_val();
  const auto r = check_jensen(f, alpha, interval(-1, 1, Mode::Float), 8);
  REQUIRE_FALSE(r.passed());
  CHECK(violates(f, alpha, *r.witness, kDefaultTolerance));
  // Same-sign pairs such as 0.25, 0.75 violate: |x| is affine there.
  const auto pair = check_strong_convexity_on(f, alpha, {f1(0.25), f1(0.75)}, TSet::jensen());
  CHECK_FALSE(pair.passed());
}

TEST_CASE("weaker moduli keep passing, and Jensen is implied by the full interval") {
  std::mt19937_64 rng(1);
  const std::vector<FunctionOracle> fs = {square(Mode::Exact), FunctionOracle::power_abs(q(1), 4),
                                          FunctionOracle::abs_val(),
                                          FunctionOracle::sum({square(Mode::Exact), FunctionOracle::abs_val()})};
  for (const auto& f : fs) {
    for (int i = 0; i < 4; ++i) {
      const Scalar c(oracle::random_rational(rng, 0, 2, 8) + mpq_class(1, 16));
      const Modulus alpha = Modulus::quadratic(c);
      const Modulus weaker = Modulus::quadratic(c / q(3));
      const auto full = check_strong_convexity(f, alpha, interval(-1, 1), TSet::full_interval(5), 6);
      if (full.passed()) {
        CHECK(check_strong_convexity(f, weaker, interval(-1, 1), TSet::full_interval(5), 6).passed());
        CHECK(check_jensen(f, alpha, interval(-1, 1), 6).passed());
      } else {
        CHECK(violates(f, alpha, *full.witness, 0));
      }
    }
  }
}

TEST_CASE("carrier-restricted check on tabulated data") {
  std::vector<Point> pts;
  std::vector<Scalar> vals;
  for (long k = -2; k <= 2; ++k) {
    pts.push_back(p1(q(k, 2)));
    vals.push_back(q(k * k, 4));
  }
  const SampleTable good(pts, vals);
  const auto r = check_on_carrier(good, Modulus::quadratic(q(1)), TSet::field_restricted({FieldKind::Dyadics, 5}));
  CHECK(r.passed());
  CHECK(r.samples_checked > 0);
  vals[2] = q(1, 2);  // bump f(0)
  const auto bad = check_on_carrier(SampleTable(pts, vals), Modulus::zero(), TSet::jensen());
  CHECK_FALSE(bad.passed());
}

TEST_CASE("subdivision coefficients telescope exactly") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto c = subdivision_coefficients(n);
    CHECK(c.matches_expected);
    CHECK(c.error_coefficient == mpq_class(static_cast<long>(n * n)));
    // Independent bookkeeping: weight vector padded with zeros at both ends.
    std::vector<mpq_class> w(2 * n + 1, 0);
    for (std::size_t i = 1; i < 2 * n; ++i) w[i] = static_cast<long>(i <= n ? i : 2 * n - i);
    for (std::size_t j = 0; j <= 2 * n; ++j) {
      const mpq_class left = w[j];
      const mpq_class right = ((j > 0 ? w[j - 1] : 0) + (j < 2 * n ? w[j + 1] : 0)) / 2;
      CHECK(c.net[j] == left - right);
    }
  }
  CHECK_THROWS(subdivision_coefficients(0));
}

TEST_CASE("subdivision certificate on x^2 from 0 to 2 with n = 2") {
  const auto r = subdivision_certificate(square(Mode::Exact), Modulus::quadratic(q(1)), interval(-3, 3), p1(q(0)),
                                         p1(q(2)), 2);
  CHECK(r.check.passed());
  CHECK(r.direct_lhs == q(1));
  CHECK(r.direct_rhs == q(1));
  CHECK(r.chain_sum_matches);
  CHECK(r.step_violations == 0);
}

TEST_CASE("subdivision certificate: n = 1 is the Jensen inequality") {
  const Modulus alpha = Modulus::quadratic(q(2));
  const auto r = subdivision_certificate(square(Mode::Exact), alpha, interval(-3, 3), p1(q(0)), p1(q(1)), 1);
  const auto j = check_strong_convexity_on(square(Mode::Exact), alpha, {p1(q(0)), p1(q(1))}, TSet::jensen());
  CHECK(r.check.passed() == j.passed());
  CHECK(r.direct_lhs == q(1, 4));
  CHECK(r.direct_rhs == q(0));
  CHECK_THROWS(subdivision_certificate(square(Mode::Exact), alpha, interval(-3, 3), p1(q(0)), p1(q(1)), 0));
  CHECK_THROWS_AS(subdivision_certificate(square(Mode::Exact), alpha, interval(-3, 3), p1(q(0)), p1(q(5)), 1),
                  DomainError);
}

TEST_CASE("chain sum matches the direct slack even when steps fail") {
  const auto r = subdivision_certificate(FunctionOracle::abs_val(), Modulus::sin_sq(), interval(-1, 1, Mode::Float),
                                         f1(-0.5), f1(0.9), 5);
  CHECK(r.chain_sum_matches);
  CHECK(r.step_violations > 0);
  CHECK(r.coefficients.matches_expected);
}

TEST_CASE("directional derivative of x^2") {
  const auto d = directional_derivative(square(Mode::Exact), interval(-2, 2), p1(q(1)), p1(q(1)));
  // x0 + t h leaves (-2, 2) for t = 1, so probing starts at k = 1; q(t) = 2 + t.
  CHECK(d.ks.front() == 1);
  for (std::size_t i = 0; i < d.ks.size(); ++i) {
    mpq_class t(1);
    t /= mpq_class(mpz_class(1) << d.ks[i]);
    CHECK(d.quotients[i].rational() == 2 + t);
  }
  CHECK(d.value.rational() == 2 + mpq_class(1, 1 << 20));
  REQUIRE(d.lower_bound.has_value());
  CHECK(d.lower_bound->rational() == 2 - mpq_class(1, 1 << 20));
}

TEST_CASE("directional derivative examples") {
  const auto abs = directional_derivative(FunctionOracle::abs_val(), interval(-1, 1), p1(q(0)), p1(q(-1)));
  CHECK(abs.value == q(1));
  CHECK(*abs.lower_bound == q(-1));  // the kink: backward quotient of |x| along -1
  const auto neg = directional_derivative(square(Mode::Exact), interval(-2, 2), p1(q(1)), p1(q(-2)));
  // q(t) = -4 + 4t; the last bracket is [q(2^-20), q(2^-19)], width 4 * 2^-20 = 2^-18.
  CHECK(neg.value.rational() == -4 + mpq_class(1, 1 << 18));
  CHECK((neg.bracket_hi - neg.bracket_lo).rational() == mpq_class(1, 1 << 18));
}

TEST_CASE("directional derivative errors") {
  const auto concave = FunctionOracle::quadratic_form({{q(-1)}}, p1(q(0)), q(0));
  CHECK_THROWS_AS(directional_derivative(concave, interval(-2, 2), p1(q(0)), p1(q(1))), NonConvexOracle);
  CHECK_THROWS_AS(directional_derivative(square(Mode::Exact), interval(-2, 2), p1(q(1)), p1(q(100000000))),
                  DomainError);
  CHECK_THROWS_AS(directional_derivative(square(Mode::Exact), interval(-2, 2), p1(q(3)), p1(q(1))), DomainError);
}

TEST_CASE("difference quotients are nonincreasing as t decreases") {
  std::mt19937_64 rng(17);
  const std::vector<FunctionOracle> fs = {square(Mode::Exact), FunctionOracle::abs_val(),
                                          FunctionOracle::power_abs(q(1), 4),
                                          FunctionOracle::sum({square(Mode::Exact), FunctionOracle::abs_val()})};
  for (const auto& f : fs) {
    for (int i = 0; i < 10; ++i) {
      const Point x0 = p1(Scalar(oracle::random_rational(rng, -1, 1, 16) * mpq_class(9, 10)));
      const Point h = p1(Scalar(oracle::random_rational(rng, -2, 2, 8)));
      const auto d = directional_derivative(f, interval(-1, 1), x0, h, {}, 20, 0.0);
      for (std::size_t k = 1; k < d.quotients.size(); ++k) CHECK(d.quotients[k] <= d.quotients[k - 1]);
    }
  }
}

TEST_CASE("sublinearity of the directional derivative") {
  const BoxDomain sq(Point({q(-1), q(-1)}), Point({q(1), q(1)}));
  const auto norm = FunctionOracle::scaled_norm_squared(2, q(1));
  const std::vector<Point> dirs = {Point({q(1), q(0)}), Point({q(0), q(1)}), Point({q(-1), q(1, 2)})};
  CHECK(sublinearity_test(norm, sq, Point({q(0), q(0)}), dirs).passed());

  const auto kink = sublinearity_test(FunctionOracle::abs_val(), interval(-1, 1), p1(q(0)), {p1(q(1)), p1(q(-1))});
  CHECK(kink.passed());

  std::mt19937_64 rng(23);
  const auto mixed = FunctionOracle::sum(
      {FunctionOracle::quadratic_form({{q(2), q(1)}, {q(1), q(1)}}, Point({q(1), q(-1)}), q(0)),
       FunctionOracle::abs_val()});
  std::vector<Point> random_dirs;
  for (int i = 0; i < 4; ++i)
    random_dirs.push_back(Point({Scalar(oracle::random_rational(rng, -1, 1, 4)), Scalar(oracle::random_rational(rng, -1, 1, 4))}));
  CHECK(sublinearity_test(mixed, sq, Point({q(0), q(1, 4)}), random_dirs).passed());
}

TEST_CASE("characterization harness in one dimension") {
  const auto pass = characterization_harness(square(Mode::Exact), Modulus::quadratic(q(1)), interval(-1, 1), {}, 8);
  CHECK(pass.agree);
  CHECK(pass.convexity.passed());
  CHECK(pass.derivative_inequality.passed());
  CHECK(pass.support.passed());

  const auto fail = characterization_harness(square(Mode::Exact), Modulus::quadratic(q(2)), interval(-1, 1), {}, 8);
  CHECK(fail.agree);
  CHECK_FALSE(fail.convexity.passed());
  CHECK_FALSE(fail.derivative_inequality.passed());
  CHECK_FALSE(fail.support.passed());

  const auto kink = characterization_harness(FunctionOracle::abs_val(), Modulus::quadratic(q(1)), interval(-1, 1), {}, 6);
  CHECK(kink.agree);
  CHECK_FALSE(kink.convexity.passed());

  const auto plain = characterization_harness(FunctionOracle::abs_val(), Modulus::zero(), interval(-1, 1), {}, 6);
  CHECK(plain.agree);
  CHECK(plain.convexity.passed());
  CHECK_FALSE(plain.caveat.empty());
}

TEST_CASE("float mode harness") {
  const auto r = characterization_harness(square(Mode::Float), Modulus::quadratic(Scalar(1.0)), interval(-1, 1, Mode::Float),
                                   {FieldKind::Reals, 6}, 6);
  CHECK(r.agree);
  CHECK(r.convexity.passed());
  CHECK(r.convexity.tolerance == kDefaultTolerance);
}
