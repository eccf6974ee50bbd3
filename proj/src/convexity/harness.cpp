#include "alphaconv/convexity.hpp"

namespace alphaconv {

CharacterizationReport characterization_harness(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                                 const FieldSpec& field, std::size_t grid, unsigned k_max, double tol) {
  const Mode mode = dom.mode();
  const auto points = sample_domain(dom, grid);
  CharacterizationReport r;

  r.convexity = check_strong_convexity(f, alpha, dom, TSet::field_restricted(field), grid, tol);

  // f(x) >= f(x0) + f'(x0, x - x0) + alpha(x - x0). The backward quotient
  // bounds f' from below, so a violation found with it is a real one.
  auto& dv = r.derivative_inequality;
  dv.mode = mode;
  dv.tolerance = mode == Mode::Float ? tol : 0.0;
  for (std::size_t i = 0; i < points.size() && dv.passed(); ++i) {
    const Point& x0 = points[i];
    const Scalar f0 = f(x0);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const Point h = points[j] - x0;
      const auto d = directional_derivative(f, dom, x0, h, field, k_max, tol);
      const Scalar lhs = f0 + d.lower() + alpha(h);
      const Scalar rhs = f(points[j]);
      ++dv.samples_checked;
      if (!leq_within(lhs, rhs, tol)) {
        dv.verdict = Verdict::Fail;
        dv.witness = Witness{x0, points[j], std::nullopt, lhs, rhs, {}};
        break;
      }
    }
  }

  auto& sv = r.support;
  sv.mode = mode;
  sv.tolerance = dv.tolerance;
  for (const auto& x0 : points) {
    const auto s = support_search(f, alpha, dom, x0, points, tol);
    ++sv.samples_checked;
    if (!s.feasible()) {
      sv.verdict = Verdict::Fail;
      Witness w{x0, std::nullopt, std::nullopt, Scalar::integer(0, mode), Scalar::integer(0, mode), {}};
      // The certificate combination reads 0 <= sum lambda b < 0.
      for (const auto& [x, lambda] : s.certificate) {
        w.extra.emplace_back("certificate_point", x);
        const Point a = x - x0;
        w.rhs += lambda.to_mode(mode) * (f(x) - f(x0) - alpha(a));
      }
      sv.witness = std::move(w);
      break;
    }
    if (s.status == SupportResult::Status::Unbounded) sv.notes.push_back("unbounded at " + x0.to_string());
  }

  r.agree = r.convexity.verdict == r.derivative_inequality.verdict && r.convexity.verdict == r.support.verdict;
  r.caveat =
      "verdicts refer to a " + std::to_string(points.size()) +
      "-point grid; Pass means not refuted there, and f' is replaced by a backward difference quotient at t = 2^-" +
      std::to_string(k_max);
  return r;
}

}  // namespace alphaconv
