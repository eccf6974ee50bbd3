#include <functional>

#include "alphaconv/convexity.hpp"
#include "alphaconv/errors.hpp"

namespace alphaconv {

std::string_view to_string(Verdict v) { return v == Verdict::Pass ? "Pass" : "Fail"; }

namespace {

using Evaluate = std::function<std::optional<Scalar>(const Point&)>;

double effective_tolerance(Mode mode, double tol) { return mode == Mode::Float ? tol : 0.0; }

// Shared scan over ordered pairs and t. eval returns nullopt to skip a
// combination (used for carrier-restricted checks).
CheckReport scan(const std::vector<Point>& points, const std::vector<Scalar>& values, const Evaluate& eval,
                 const Modulus& alpha, const std::vector<Scalar>& ts, Mode mode, double tol) {
  CheckReport report;
  report.mode = mode;
  report.tolerance = effective_tolerance(mode, tol);
  const Scalar one = Scalar::integer(1, mode);
  std::size_t skipped = 0;

  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const Point& x = points[i];
      const Point& y = points[j];
      for (const auto& t : ts) {
        const Scalar s = one - t;
        const Point z = t * x + s * y;
        const auto fz = eval(z);
        if (!fz) {
          ++skipped;
          continue;
        }
        ++report.samples_checked;
        const Scalar rhs = t * values[i] + s * values[j] - t * alpha(s * (x - y)) - s * alpha(t * (y - x));
        if (!leq_within(*fz, rhs, tol)) {
          report.verdict = Verdict::Fail;
          report.witness = Witness{x, y, t, *fz, rhs, {}};
          return report;
        }
      }
    }
  }
  if (skipped > 0) report.notes.push_back(std::to_string(skipped) + " combinations off the carrier skipped");
  return report;
}

}  // namespace

CheckReport check_strong_convexity_on(const FunctionOracle& f, const Modulus& alpha,
                                      const std::vector<Point>& points, const TSet& tset, double tol) {
  if (points.empty()) throw EvaluationError("no sample points");
  const Mode mode = points.front().mode();
  const auto ts = enumerate_t(tset, mode);
  std::vector<Scalar> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(f(p));
  return scan(points, values, [&](const Point& z) { return std::optional<Scalar>(f(z)); }, alpha, ts, mode, tol);
}

CheckReport check_strong_convexity(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                                   const TSet& tset, std::size_t grid, double tol) {
  auto report = check_strong_convexity_on(f, alpha, sample_domain(dom, grid), tset, tol);
  report.notes.push_back("grid " + std::to_string(grid) + " per axis");
  return report;
}

CheckReport check_jensen(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom, std::size_t grid,
                         double tol) {
  return check_strong_convexity(f, alpha, dom, TSet::jensen(), grid, tol);
}

CheckReport check_on_carrier(const SampleTable& table, const Modulus& alpha, const TSet& tset, double tol) {
  const Mode mode = table.mode();
  const auto ts = enumerate_t(tset, mode);
  const Evaluate eval = [&](const Point& z) -> std::optional<Scalar> {
    if (auto idx = table.find(z)) return table.values()[*idx];
    return std::nullopt;
  };
  return scan(table.points(), table.values(), eval, alpha, ts, mode, tol);
}

}  // namespace alphaconv
