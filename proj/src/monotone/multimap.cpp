#include <set>

#include "alphaconv/monotone.hpp"

namespace alphaconv {

MultiMap::MultiMap(std::vector<Point> carrier, std::vector<std::vector<LinearFunctional>> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  if (carrier_.empty()) throw EvaluationError("multimap carrier is empty");
  if (carrier_.size() != values_.size())
    throw EvaluationError("multimap has " + std::to_string(carrier_.size()) + " carrier points but " +
                          std::to_string(values_.size()) + " value lists");
  const std::size_t d = carrier_.front().dim();
  const Mode m = carrier_.front().mode();
  std::set<Point, LexLess> seen;
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    const Point& x = carrier_[i];
    if (x.dim() != d || x.mode() != m) throw EvaluationError("multimap carrier point " + std::to_string(i) +
                                                             " differs in dimension or mode");
    if (!seen.insert(x).second) throw EvaluationError("multimap carrier point repeated: " + x.to_string());
    if (values_[i].empty()) throw EvaluationError("multimap value list " + std::to_string(i) + " is empty");
    for (const auto& phi : values_[i])
      if (phi.dim() != d || phi.vector().mode() != m)
        throw EvaluationError("functional at carrier point " + std::to_string(i) + " differs in dimension or mode");
  }
}

SubdiffInterval subdiff_1d(const FunctionOracle& f, const BoxDomain& dom, const Point& x0, const FieldSpec& field,
                           unsigned k_max, double tol) {
  if (x0.dim() != 1) throw DomainError("subdiff_1d needs d = 1");
  const Mode mode = x0.mode();
  const Point e = Point::unit(1, 0, mode);
  const auto right = directional_derivative(f, dom, x0, e, field, k_max, tol);
  const auto left = directional_derivative(f, dom, x0, -e, field, k_max, tol);

  SubdiffInterval s;
  s.lo = -left.value;
  s.hi = right.value;
  s.resolution = max(right.bracket_hi - right.bracket_lo, left.bracket_hi - left.bracket_lo);
  if (!leq_within(*s.lo, *s.hi, tol))
    throw NonConvexOracle("non-convex oracle: empty subdifferential at " + x0.to_string() + " ([" +
                          s.lo->to_string() + ", " + s.hi->to_string() + "])");
  return s;
}

CheckReport check_strengthened_subgradient(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                                           const Point& x0, const LinearFunctional& phi,
                                           const std::vector<Point>& sample, double tol) {
  dom.require_contains(x0);
  const Mode mode = x0.mode();
  CheckReport report;
  report.mode = mode;
  report.tolerance = mode == Mode::Float ? tol : 0.0;
  const Scalar f0 = f(x0);
  for (const auto& x : sample) {
    const Point h = x - x0;
    const Scalar lhs = f0 + phi(h) + alpha(h);
    const Scalar rhs = f(x);
    ++report.samples_checked;
    if (!leq_within(lhs, rhs, tol)) {
      report.verdict = Verdict::Fail;
      report.witness = Witness{x0, x, std::nullopt, lhs, rhs, {{"phi", phi.vector()}}};
      return report;
    }
  }
  return report;
}

CheckReport alpha_monotone(const MultiMap& phi, const Modulus& alpha, double tol) {
  if (phi.size() < 2) throw EvaluationError("alpha_monotone needs at least two carrier points");
  const Mode mode = phi.mode();
  CheckReport report;
  report.mode = mode;
  report.tolerance = mode == Mode::Float ? tol : 0.0;
  const Scalar zero = Scalar::integer(0, mode);
  const auto& xs = phi.carrier();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      const Point fwd = xs[j] - xs[i];
      const Point bwd = -fwd;
      const Scalar gap = alpha(fwd) + alpha(bwd);
      for (const auto& a : phi.values()[i]) {
        for (const auto& b : phi.values()[j]) {
          const Scalar lhs = a(fwd) + b(bwd) + gap;
          ++report.samples_checked;
          if (!leq_within(lhs, zero, tol)) {
            report.verdict = Verdict::Fail;
            report.witness = Witness{xs[i], xs[j], std::nullopt, lhs, zero, {{"phi", a.vector()}, {"psi", b.vector()}}};
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace alphaconv
