#include <algorithm>

#include "alphaconv/errors.hpp"
#include "alphaconv/modulus_ops.hpp"

namespace alphaconv {

std::string_view to_string(Amplifier op) { return op == Amplifier::JensenTilde ? "jensen" : "scaling"; }

std::string_view to_string(Evidence e) { return e == Evidence::ClosedForm ? "closed_form" : "numerical"; }

namespace {

// Re-labels a missing table entry as a resolution problem of the grid.
Scalar eval_on_grid(const Modulus& alpha, const Point& u) {
  try {
    return alpha(u);
  } catch (const ModeError&) {
    throw;
  } catch (const EvaluationError& e) {
    if (std::holds_alternative<Modulus::Tabulated>(alpha.variant()))
      throw EvaluationError("grid refinement insufficient: " + std::string(e.what()));
    throw;
  }
}

const Modulus::PowerNorm* as_power_norm(const Modulus& alpha) {
  return std::get_if<Modulus::PowerNorm>(&alpha.variant());
}

// The catalog cases where the sup has a closed form. Returns nullopt when the
// brute force has to run; otherwise an AmplifyResult (possibly DIVERGES).
std::optional<AmplifyResult> closed_form_value(const Modulus& alpha, const Point& u, Amplifier op,
                                               std::size_t truncation) {
  AmplifyResult r;
  r.evidence = Evidence::ClosedForm;
  r.truncation = truncation;
  const auto& v = alpha.variant();
  if (std::holds_alternative<Modulus::Zero>(v) || std::holds_alternative<Modulus::Quadratic>(v)) {
    // n^2 c|u/n|^2 = c|u|^2 for all n; c|tu|^2/t = t c|u|^2 peaks at t = 1.
    r.value = alpha(u);
    return r;
  }
  if (const auto* pn = as_power_norm(alpha)) {
    if (u.is_zero()) {
      r.value = Scalar::integer(0, u.mode());
      return r;
    }
    // Jensen: n^{2-p} eps|u|^p, unbounded iff p < 2, else max at n = 1.
    // Scaling: t^{p-1} eps|u|^p, unbounded iff p < 1, else max at t = 1.
    const double critical = op == Amplifier::JensenTilde ? 2.0 : 1.0;
    if (pn->p < critical) return r;
    r.value = alpha(u);
    r.argmax = Scalar::integer(1, u.mode());
    return r;
  }
  return std::nullopt;
}

std::optional<Modulus> closed_form_modulus(const Modulus& alpha, Amplifier op) {
  const auto& v = alpha.variant();
  if (std::holds_alternative<Modulus::Zero>(v) || std::holds_alternative<Modulus::Quadratic>(v)) return alpha;
  if (const auto* pn = as_power_norm(alpha))
    if (pn->p >= (op == Amplifier::JensenTilde ? 2.0 : 1.0)) return alpha;
  return std::nullopt;
}

}  // namespace

std::vector<Scalar> jensen_sequence(const Modulus& alpha, const Point& u, std::size_t truncation) {
  if (truncation == 0) throw EvaluationError("truncation N must be >= 1");
  std::vector<Scalar> out;
  out.reserve(truncation);
  const Mode mode = u.mode();
  for (std::size_t n = 1; n <= truncation; ++n) {
    const Scalar sn = Scalar::integer(static_cast<long>(n), mode);
    out.push_back(sn * sn * eval_on_grid(alpha, u / sn));
  }
  return out;
}

AmplifyResult jensen_brute_force(const Modulus& alpha, const Point& u, std::size_t truncation) {
  const auto seq = jensen_sequence(alpha, u, truncation);
  std::size_t best = 0;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[best] < seq[i]) best = i;
  AmplifyResult r;
  r.evidence = Evidence::Numerical;
  r.truncation = truncation;
  r.value = seq[best];
  r.argmax = Scalar::integer(static_cast<long>(best + 1), u.mode());
  return r;
}

std::vector<Scalar> scaling_samples(const FieldSpec& field, Mode mode) {
  std::vector<Scalar> out;
  for (unsigned k = 0; k <= kScalingDyadicDepth; ++k) {
    mpq_class t(1);
    t /= mpq_class(mpz_class(1) << k);
    out.push_back(Scalar(t).to_mode(mode));
  }
  for (auto& t : enumerate_field(field, mode))
    if (!t.is_zero()) out.push_back(std::move(t));
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a < b; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AmplifyResult scaling_brute_force(const Modulus& alpha, const Point& u, const FieldSpec& field) {
  const auto ts = scaling_samples(field, u.mode());
  AmplifyResult r;
  r.evidence = Evidence::Numerical;
  r.truncation = ts.size();
  for (const auto& t : ts) {
    Scalar q = eval_on_grid(alpha, t * u) / t;
    if (!r.value || *r.value < q) {
      r.value = std::move(q);
      r.argmax = t;
    }
  }
  return r;
}

AmplifiedModulus::AmplifiedModulus(Modulus base, Amplifier op, std::size_t truncation, FieldSpec field)
    : base_(std::move(base)), op_(op), truncation_(truncation), field_(field) {
  if (op_ == Amplifier::JensenTilde && truncation_ == 0) throw EvaluationError("truncation N must be >= 1");
  closed_form_ = closed_form_modulus(base_, op_);
}

AmplifiedModulus AmplifiedModulus::jensen(Modulus base, std::size_t truncation) {
  return AmplifiedModulus(std::move(base), Amplifier::JensenTilde, truncation, FieldSpec{});
}

AmplifiedModulus AmplifiedModulus::scaling(Modulus base, FieldSpec field) {
  const std::size_t samples = scaling_samples(field, Mode::Exact).size();
  return AmplifiedModulus(std::move(base), Amplifier::ScalingHat, samples, field);
}

AmplifyResult AmplifiedModulus::at(const Point& u) const {
  if (auto r = closed_form_value(base_, u, op_, truncation_)) return *r;
  if (op_ == Amplifier::JensenTilde) return jensen_brute_force(base_, u, truncation_);
  return scaling_brute_force(base_, u, field_);
}

AmplifyResult amplify_jensen(const Modulus& alpha, const Point& u, std::size_t truncation) {
  return AmplifiedModulus::jensen(alpha, truncation).at(u);
}

AmplifyResult amplify_scaling(const Modulus& alpha, const Point& u, const FieldSpec& field) {
  return AmplifiedModulus::scaling(alpha, field).at(u);
}

}  // namespace alphaconv
