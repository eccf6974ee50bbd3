#include "alphaconv/convexity.hpp"
#include "alphaconv/errors.hpp"

namespace alphaconv {

SubdivisionCoefficients subdivision_coefficients(std::size_t n) {
  if (n == 0) throw EvaluationError("subdivision needs n >= 1");
  const std::size_t m = 2 * n;
  SubdivisionCoefficients c;
  c.weights.reserve(m - 1);
  for (std::size_t i = 1; i < m; ++i) c.weights.emplace_back(static_cast<long>(i <= n ? i : m - i));

  // w_0 = w_{2n} = 0 at the chain ends.
  auto w = [&](std::size_t i) -> mpq_class { return (i == 0 || i >= m) ? mpq_class(0) : c.weights[i - 1]; };

  // Step i reads f(x_i) <= (f(x_{i-1}) + f(x_{i+1})) / 2 - alpha(...). Summed
  // with weights w_i, f(x_j) appears with w_j on the left and
  // (w_{j-1} + w_{j+1}) / 2 on the right.
  c.net.reserve(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    const mpq_class left = w(j);
    const mpq_class right = ((j > 0 ? w(j - 1) : mpq_class(0)) + w(j + 1)) / 2;
    c.net.push_back(left - right);
  }
  c.error_coefficient = 0;
  for (const auto& wi : c.weights) c.error_coefficient += wi;

  bool ok = c.error_coefficient == mpq_class(static_cast<long>(n * n));
  for (std::size_t j = 0; j <= m && ok; ++j) {
    mpq_class expected = 0;
    if (j == n) expected = 1;
    else if (j == 0 || j == m) expected = mpq_class(-1, 2);
    ok = c.net[j] == expected;
  }
  c.matches_expected = ok;
  return c;
}

SubdivisionReport subdivision_certificate(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                                          const Point& x, const Point& y, std::size_t n, double tol) {
  if (n == 0) throw EvaluationError("subdivision needs n >= 1");
  dom.require_contains(x);
  dom.require_contains(y);
  const Mode mode = x.mode();
  const std::size_t m = 2 * n;

  SubdivisionReport r;
  r.coefficients = subdivision_coefficients(n);
  r.check.mode = mode;
  r.check.tolerance = mode == Mode::Float ? tol : 0.0;

  const Scalar sn = Scalar::integer(static_cast<long>(n), mode);
  const Scalar sm = Scalar::integer(static_cast<long>(m), mode);
  const Scalar two = Scalar::integer(2, mode);
  const Point delta = (x - y) / sm;
  const Scalar err = alpha(delta);

  std::vector<Point> xs;
  std::vector<Scalar> fs;
  xs.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const Scalar s = Scalar::integer(static_cast<long>(i), mode) / sm;
    xs.push_back(x + s * (y - x));
    fs.push_back(f(xs.back()));
  }

  r.direct_lhs = fs[n];
  r.direct_rhs = (fs[0] + fs[m]) / two - sn * sn * err;
  r.direct_holds = leq_within(r.direct_lhs, r.direct_rhs, tol);

  // Midpoint steps; the neighbours of x_i differ by (y - x) / n, so every
  // step carries the same error alpha((x - y) / 2n).
  Scalar chain = Scalar::integer(0, mode);
  for (std::size_t i = 1; i < m; ++i) {
    const Scalar slack = (fs[i - 1] + fs[i + 1]) / two - err - fs[i];
    r.check.samples_checked += 1;
    if (!leq_within(Scalar::integer(0, mode), slack, tol)) {
      ++r.step_violations;
      if (!r.first_violated_step) r.first_violated_step = i;
    }
    chain += Scalar(r.coefficients.weights[i - 1]).to_mode(mode) * slack;
  }
  const Scalar direct_slack = r.direct_rhs - r.direct_lhs;
  r.chain_sum_matches = eq_within(chain, direct_slack, tol * static_cast<double>(n * n + 1));
  r.check.samples_checked += 1;

  const bool pass = r.direct_holds && r.coefficients.matches_expected && r.chain_sum_matches;
  r.check.verdict = pass ? Verdict::Pass : Verdict::Fail;
  if (!pass) r.check.witness = Witness{x, y, std::nullopt, r.direct_lhs, r.direct_rhs, {}};
  if (!r.chain_sum_matches) r.check.notes.push_back("weighted chain sum differs from the direct slack");
  if (r.step_violations > 0)
    r.check.notes.push_back(std::to_string(r.step_violations) + " midpoint steps violated");
  return r;
}

}  // namespace alphaconv
