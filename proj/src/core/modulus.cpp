#include "alphaconv/modulus.hpp"

#include <cmath>

#include "alphaconv/errors.hpp"

namespace alphaconv {

bool is_integer_exponent(double p) { return p > 0 && p <= 64 && std::floor(p) == p; }

Modulus Modulus::quadratic(Scalar c) {
  if (c.sign() <= 0) throw EvaluationError("quadratic modulus needs c > 0");
  return Modulus(Quadratic{std::move(c)});
}

Modulus Modulus::power_norm(Scalar eps, double p) {
  if (eps.sign() <= 0) throw EvaluationError("power_norm modulus needs eps > 0");
  if (!(p > 0) || !std::isfinite(p)) throw EvaluationError("power_norm modulus needs p > 0");
  return Modulus(PowerNorm{std::move(eps), p});
}

Modulus Modulus::tabulated(SampleTable table, double tol) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Scalar& v = table.values()[i];
    if (!leq_within(Scalar::integer(0, v.mode()), v, tol))
      throw EvaluationError("tabulated modulus is negative at " + table.points()[i].to_string());
    auto mirror = table.find(-table.points()[i]);
    if (!mirror)
      throw EvaluationError("tabulated modulus is missing -u for u = " +
                            table.points()[i].to_string());
    if (!eq_within(v, table.values()[*mirror], tol))
      throw EvaluationError("tabulated modulus is not even at u = " + table.points()[i].to_string());
  }
  return Modulus(Tabulated{std::move(table)});
}

Scalar Modulus::operator()(const Point& u) const {
  const Mode mode = u.mode();
  return std::visit(
      [&](const auto& v) -> Scalar {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Zero>) {
          return Scalar::integer(0, mode);
        } else if constexpr (std::is_same_v<V, Quadratic>) {
          return v.c.to_mode(mode) * u.norm_squared();
        } else if constexpr (std::is_same_v<V, PowerNorm>) {
          const Scalar eps = v.eps.to_mode(mode);
          const bool integral = is_integer_exponent(v.p);
          const auto ip = static_cast<unsigned>(v.p);
          if (integral && ip % 2 == 0) return eps * pow_int(u.norm_squared(), ip / 2);
          if (integral && u.dim() == 1) return eps * pow_int(u[0].abs(), ip);
          if (mode == Mode::Exact)
            throw ModeError("power_norm with p = " + Scalar(v.p).to_string() +
                            " has irrational values; use float mode");
          const double n = std::sqrt(u.norm_squared().to_double());
          return Scalar(eps.to_double() * std::pow(n, v.p));
        } else if constexpr (std::is_same_v<V, SinSq>) {
          if (u.dim() != 1) throw DomainError("sin_sq modulus is defined for d = 1 only");
          if (mode == Mode::Exact) throw ModeError("sin_sq modulus requires float mode");
          const double s = std::sin(u[0].to_double());
          return Scalar(s * s);
        } else {
          auto value = v.table.lookup(u);
          if (!value) throw EvaluationError("modulus table has no value at " + u.to_string());
          return *value;
        }
      },
      v_);
}

bool Modulus::exact_capable(std::size_t dim) const {
  if (std::holds_alternative<SinSq>(v_)) return false;
  if (const auto* pn = std::get_if<PowerNorm>(&v_)) {
    if (!is_integer_exponent(pn->p)) return false;
    return static_cast<unsigned>(pn->p) % 2 == 0 || dim == 1;
  }
  if (const auto* t = std::get_if<Tabulated>(&v_)) return t->table.mode() == Mode::Exact;
  return true;
}

void Modulus::require_mode(Mode mode, std::size_t dim) const {
  if (std::holds_alternative<SinSq>(v_) && dim != 1)
    throw DomainError("sin_sq modulus is defined for d = 1 only");
  if (mode == Mode::Exact && !exact_capable(dim))
    throw ModeError(describe() + " cannot be evaluated exactly; use float mode");
}

std::string Modulus::describe() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Zero>) return "zero";
        else if constexpr (std::is_same_v<V, Quadratic>) return "quadratic(c=" + v.c.to_string() + ")";
        else if constexpr (std::is_same_v<V, PowerNorm>)
          return "power_norm(eps=" + v.eps.to_string() + ", p=" + Scalar(v.p).to_string() + ")";
        else if constexpr (std::is_same_v<V, SinSq>) return "sin_sq";
        else return "tabulated(" + std::to_string(v.table.size()) + " points)";
      },
      v_);
}

}  // namespace alphaconv
