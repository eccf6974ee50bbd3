#include "alphaconv/convexity.hpp"
#include "alphaconv/errors.hpp"

namespace alphaconv {

namespace {

Scalar dyadic(unsigned k, Mode mode) {
  mpq_class t(1);
  t /= mpq_class(mpz_class(1) << k);
  return Scalar(t).to_mode(mode);
}

struct Bracket {
  Scalar lo;
  Scalar hi;
};

// Interval believed to contain f'(x0, h): the backward quotient from below
// when available, otherwise the last quotient minus the bracket width.
Bracket interval(const DirectionalDerivative& d) {
  if (d.lower_bound) return {*d.lower_bound, d.value};
  return {d.value - (d.bracket_hi - d.bracket_lo), d.value};
}

}  // namespace

// Dyadic increments belong to every subfield, so the field only documents
// which quotients are admissible; the probe sequence is the same.
DirectionalDerivative directional_derivative(const FunctionOracle& f, const BoxDomain& dom, const Point& x0,
                                             const Point& h, const FieldSpec& /*field*/, unsigned k_max,
                                             double tol) {
  dom.require_contains(x0);
  if (h.dim() != x0.dim()) throw DomainError("direction has the wrong dimension");
  const Mode mode = x0.mode();
  const Scalar f0 = f(x0);

  DirectionalDerivative d;
  for (unsigned k = 0; k <= k_max; ++k) {
    const Scalar t = dyadic(k, mode);
    const Point z = x0 + t * h;
    if (!dom.contains(z)) continue;
    Scalar q = (f(z) - f0) / t;
    if (!d.quotients.empty() && !leq_within(q, d.quotients.back(), tol))
      throw NonConvexOracle("non-convex oracle: difference quotient increases from " +
                            d.quotients.back().to_string() + " to " + q.to_string() + " at t = 2^-" +
                            std::to_string(k) + " (x0 = " + x0.to_string() + ", h = " + h.to_string() + ")");
    d.ks.push_back(k);
    d.quotients.push_back(std::move(q));
  }
  if (d.quotients.empty())
    throw DomainError("x0 + t h leaves the domain for every probed t (x0 = " + x0.to_string() +
                      ", h = " + h.to_string() + ")");

  const std::size_t last = d.quotients.size() - 1;
  d.value = d.quotients[last];
  d.bracket_lo = d.quotients[last];
  d.bracket_hi = d.quotients[last > 0 ? last - 1 : last];

  const Scalar t_last = dyadic(d.ks.back(), mode);
  const Point back = x0 - t_last * h;
  if (dom.contains(back)) {
    Scalar lb = (f0 - f(back)) / t_last;
    if (!leq_within(lb, d.value, tol))
      throw NonConvexOracle("non-convex oracle: backward quotient " + lb.to_string() +
                            " exceeds forward quotient " + d.value.to_string() + " at x0 = " + x0.to_string());
    d.lower_bound = std::move(lb);
  }
  return d;
}

CheckReport sublinearity_test(const FunctionOracle& f, const BoxDomain& dom, const Point& x0,
                              const std::vector<Point>& directions, const FieldSpec& field, unsigned k_max,
                              double tol) {
  const Mode mode = x0.mode();
  CheckReport report;
  report.mode = mode;
  report.tolerance = mode == Mode::Float ? tol : 0.0;
  auto deriv = [&](const Point& h) { return directional_derivative(f, dom, x0, h, field, k_max, tol); };

  std::vector<DirectionalDerivative> ds;
  ds.reserve(directions.size());
  for (const auto& h : directions) ds.push_back(deriv(h));

  // f'(x0, h1 + h2) <= f'(x0, h1) + f'(x0, h2): lower estimate on the left,
  // upper estimates on the right.
  for (std::size_t i = 0; i < directions.size(); ++i) {
    for (std::size_t j = i; j < directions.size(); ++j) {
      const auto sum = deriv(directions[i] + directions[j]);
      const Scalar lhs = interval(sum).lo;
      const Scalar rhs = ds[i].value + ds[j].value;
      ++report.samples_checked;
      if (!leq_within(lhs, rhs, tol)) {
        report.verdict = Verdict::Fail;
        report.witness = Witness{directions[i], directions[j], std::nullopt, lhs, rhs, {}};
        report.notes.push_back("subadditivity violated");
        return report;
      }
    }
  }

  // f'(x0, lambda h) = lambda f'(x0, h): the two brackets must overlap.
  std::vector<Scalar> lambdas;
  for (auto& l : enumerate_field(field, mode))
    if (!l.is_zero()) lambdas.push_back(std::move(l));
  lambdas.push_back(Scalar::integer(2, mode));

  for (std::size_t i = 0; i < directions.size(); ++i) {
    const Bracket base = interval(ds[i]);
    for (const auto& lambda : lambdas) {
      const Bracket scaled = interval(deriv(lambda * directions[i]));
      const Scalar lo = lambda * base.lo;
      const Scalar hi = lambda * base.hi;
      ++report.samples_checked;
      const bool overlap = leq_within(scaled.lo, hi, tol) && leq_within(lo, scaled.hi, tol);
      if (!overlap) {
        report.verdict = Verdict::Fail;
        const bool above = !leq_within(scaled.lo, hi, tol);
        report.witness = Witness{directions[i], std::nullopt, lambda, above ? scaled.lo : lo,
                                 above ? hi : scaled.hi, {}};
        report.notes.push_back("positive homogeneity violated");
        return report;
      }
    }
  }
  return report;
}

}  // namespace alphaconv
