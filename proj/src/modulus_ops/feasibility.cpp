#include <algorithm>
#include <cmath>

#include "alphaconv/errors.hpp"
#include "alphaconv/modulus_ops.hpp"

namespace alphaconv {

namespace {

// Sustained growth past the threshold over the second half of the window.
std::optional<std::size_t> numerical_divergence(const std::vector<Scalar>& seq, double threshold) {
  if (seq.empty()) return std::nullopt;
  const Scalar limit = Scalar::from_double(threshold, seq.front().mode());
  if (!(limit < seq.back())) return std::nullopt;
  for (std::size_t i = seq.size() / 2; i + 1 < seq.size(); ++i)
    if (seq[i + 1] < seq[i]) return std::nullopt;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (limit < seq[i]) return i + 1;
  return std::nullopt;
}

}  // namespace

FeasibilityResult feasibility_check(const Modulus& alpha, const BoxDomain& dom, std::size_t truncation,
                                    double threshold, std::size_t n_per_axis) {
  if (truncation == 0) throw EvaluationError("truncation N must be >= 1");
  if (!(threshold > 0)) throw EvaluationError("divergence threshold must be positive");

  FeasibilityResult result;
  result.truncation = truncation;
  const auto directions = sample_domain(dom.half_difference(), n_per_axis);
  const auto* pn = std::get_if<Modulus::PowerNorm>(&alpha.variant());
  const bool catalog = pn != nullptr || std::holds_alternative<Modulus::Zero>(alpha.variant()) ||
                       std::holds_alternative<Modulus::Quadratic>(alpha.variant());

  for (const auto& u : directions) {
    if (u.is_zero()) continue;
    ++result.directions_scanned;
    if (catalog) {
      // n^2 eps|u/n|^p = n^{2-p} eps|u|^p diverges exactly when p < 2.
      if (pn != nullptr && pn->p < 2.0) {
        result.feasible = false;
        result.witness_u = u;
        result.evidence = Evidence::ClosedForm;
        return result;
      }
      continue;
    }
    const auto seq = jensen_sequence(alpha, u, truncation);
    if (auto n = numerical_divergence(seq, threshold)) {
      result.feasible = false;
      result.witness_u = u;
      result.witness_n = n;
      result.evidence = Evidence::Numerical;
      return result;
    }
  }
  result.evidence = catalog ? Evidence::ClosedForm : Evidence::Numerical;
  return result;
}

std::vector<Scalar> validity_sequence(const Modulus& alpha, const Point& h, unsigned k_max) {
  std::vector<Scalar> out;
  out.reserve(k_max + 1);
  const Mode mode = h.mode();
  const Scalar two = Scalar::integer(2, mode);
  Scalar t = Scalar::integer(1, mode);
  for (unsigned k = 0; k <= k_max; ++k) {
    out.push_back(alpha(t * h) / t);
    t /= two;
  }
  return out;
}

ValidityResult modulus_validity(const Modulus& alpha, const std::vector<Point>& directions, unsigned k_max,
                                double threshold) {
  if (directions.empty()) throw EvaluationError("modulus_validity needs at least one direction");
  if (k_max < 4) throw EvaluationError("modulus_validity needs k_max >= 4");

  ValidityResult result;
  const Mode mode = directions.front().mode();
  const Scalar at_zero = alpha(Point::zeros(directions.front().dim(), mode));
  result.zero_at_origin = mode == Mode::Exact ? at_zero.is_zero() : std::abs(at_zero.to_double()) <= threshold;

  const auto* pn = std::get_if<Modulus::PowerNorm>(&alpha.variant());
  const bool catalog = pn != nullptr || std::holds_alternative<Modulus::Zero>(alpha.variant()) ||
                       std::holds_alternative<Modulus::Quadratic>(alpha.variant());
  result.evidence = catalog ? Evidence::ClosedForm : Evidence::Numerical;
  const Scalar limit = Scalar::from_double(threshold, mode);

  auto tail_of = [&](const Point& h) {
    std::vector<Scalar> seq;
    try {
      seq = validity_sequence(alpha, h, k_max);
    } catch (const ModeError&) {
      if (!catalog) throw;
      return seq;  // closed form decides; the sampled tail is only evidence
    }
    const std::size_t keep = std::min<std::size_t>(seq.size(), 4);
    return std::vector<Scalar>(seq.end() - static_cast<long>(keep), seq.end());
  };

  for (const auto& h : directions) {
    bool ok;
    if (catalog) {
      // eps |t h|^p / t = t^{p-1} eps |h|^p -> 0 iff p > 1 (or h = 0).
      ok = pn == nullptr || pn->p > 1.0 || h.is_zero();
    } else {
      const auto seq = validity_sequence(alpha, h, k_max);
      ok = leq_within(seq.back().abs(), limit, 0.0);
    }
    if (!ok) {
      result.valid = false;
      result.failing_direction = h;
      result.last_terms = tail_of(h);
      return result;
    }
  }
  if (!result.zero_at_origin) {
    result.valid = false;
    result.failing_direction = Point::zeros(directions.front().dim(), mode);
  }
  result.last_terms = tail_of(directions.front());
  return result;
}

}  // namespace alphaconv
