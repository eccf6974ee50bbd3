#include <optional>

#include "alphaconv/convexity.hpp"
#include "alphaconv/errors.hpp"
#include "alphaconv/fourier_motzkin.hpp"

namespace alphaconv {

std::string_view to_string(SupportResult::Status s) {
  switch (s) {
    case SupportResult::Status::Found: return "Found";
    case SupportResult::Status::Infeasible: return "Infeasible";
    case SupportResult::Status::Unbounded: return "Unbounded";
  }
  return "?";
}

namespace {

struct Constraint {
  Point x;
  Point a;   // x - x0
  Scalar b;  // f(x) - f(x0) - alpha(x - x0)
};

// phi . a <= b, with the tolerance added in Float mode. The solvers always
// run on rationals; Float inputs convert exactly.
LinearConstraint to_rational(const Constraint& c, double tol) {
  LinearConstraint out;
  out.a.reserve(c.a.dim());
  for (const auto& v : c.a) out.a.push_back(v.to_mode(Mode::Exact).rational());
  out.b = c.b.to_mode(Mode::Exact).rational();
  if (c.b.mode() == Mode::Float) out.b += Scalar::from_double(tol, Mode::Float).to_mode(Mode::Exact).rational();
  return out;
}

// d = 1: phi a <= b reads phi <= b/a for a > 0 and phi >= b/a for a < 0.
FourierMotzkinResult slope_intervals(const std::vector<LinearConstraint>& rows) {
  FourierMotzkinResult r;
  std::optional<std::size_t> lo_i, hi_i;
  std::optional<mpq_class> lo, hi;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const mpq_class& a = rows[i].a[0];
    const mpq_class& b = rows[i].b;
    if (sgn(a) == 0) {
      if (sgn(b) < 0) {
        r.certificate = {{i, mpq_class(1)}};
        return r;
      }
      continue;
    }
    const mpq_class bound = b / a;
    if (sgn(a) > 0) {
      if (!hi || bound < *hi) hi = bound, hi_i = i;
    } else {
      if (!lo || bound > *lo) lo = bound, lo_i = i;
    }
  }
  if (lo && hi && *hi < *lo) {
    // a_hi * row_lo + (-a_lo) * row_hi cancels phi and leaves 0 <= negative.
    r.certificate = {{*lo_i, rows[*hi_i].a[0]}, {*hi_i, -rows[*lo_i].a[0]}};
    return r;
  }
  r.feasible = true;
  r.bounded = lo && hi;
  r.solution = {lo && hi ? (*lo + *hi) / 2 : lo ? *lo : hi ? *hi : mpq_class(0)};
  r.peak_rows = rows.size();
  return r;
}

void verify_certificate(const std::vector<LinearConstraint>& rows,
                        const std::vector<std::pair<std::size_t, mpq_class>>& cert, std::size_t dim) {
  std::vector<mpq_class> sum_a(dim, mpq_class(0));
  mpq_class sum_b = 0;
  for (const auto& [i, lambda] : cert) {
    if (sgn(lambda) < 0) throw Error("support certificate has a negative multiplier");
    for (std::size_t j = 0; j < dim; ++j) sum_a[j] += lambda * rows[i].a[j];
    sum_b += lambda * rows[i].b;
  }
  for (const auto& v : sum_a)
    if (sgn(v) != 0) throw Error("support certificate does not cancel phi");
  if (sgn(sum_b) >= 0) throw Error("support certificate is not contradictory");
}

}  // namespace

SupportResult support_search(const FunctionOracle& f, const Modulus& alpha, const BoxDomain& dom,
                             const Point& x0, const std::vector<Point>& sample, double tol) {
  dom.require_contains(x0);
  const Mode mode = x0.mode();
  const std::size_t d = x0.dim();
  const Scalar f0 = f(x0);

  std::vector<Constraint> cs;
  cs.reserve(sample.size());
  for (const auto& x : sample) {
    dom.require_contains(x);
    Point a = x - x0;
    Scalar b = f(x) - f0 - alpha(a);
    cs.push_back({x, std::move(a), std::move(b)});
  }
  std::vector<LinearConstraint> rows;
  rows.reserve(cs.size());
  for (const auto& c : cs) rows.push_back(to_rational(c, tol));

  const auto solved = d == 1 ? slope_intervals(rows) : fourier_motzkin(rows, d);

  SupportResult result;
  result.x0 = x0;
  result.constraints_used = cs.size();
  if (!solved.feasible) {
    verify_certificate(rows, solved.certificate, d);
    result.status = SupportResult::Status::Infeasible;
    for (const auto& [i, lambda] : solved.certificate)
      result.certificate.emplace_back(cs[i].x, Scalar(lambda));  // exact even in Float mode
    result.verified = true;
    return result;
  }

  std::vector<Scalar> coords;
  coords.reserve(d);
  for (const auto& v : solved.solution) coords.push_back(Scalar(v).to_mode(mode));
  LinearFunctional phi{Point(std::move(coords))};
  result.verified = true;
  for (const auto& c : cs)
    if (!leq_within(phi(c.a), c.b, tol)) result.verified = false;
  result.phi = std::move(phi);
  result.status = solved.bounded ? SupportResult::Status::Found : SupportResult::Status::Unbounded;
  return result;
}

}  // namespace alphaconv
