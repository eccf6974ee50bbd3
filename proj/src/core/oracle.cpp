#include "alphaconv/oracle.hpp"

#include <cmath>

#include "alphaconv/errors.hpp"
#include "alphaconv/modulus.hpp"

namespace alphaconv {

FunctionOracle FunctionOracle::quadratic_form(std::vector<std::vector<Scalar>> a, Point b, Scalar c0) {
  const std::size_t d = a.size();
  if (d == 0) throw EvaluationError("quadratic form needs a non-empty matrix");
  if (b.dim() != d) throw DomainError("quadratic form: b has the wrong dimension");
  for (const auto& row : a)
    if (row.size() != d) throw DomainError("quadratic form: matrix is not square");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(a[i][j] == a[j][i])) throw EvaluationError("quadratic form: matrix is not symmetric");
  return FunctionOracle(QuadraticForm{std::move(a), std::move(b), std::move(c0)});
}

FunctionOracle FunctionOracle::scaled_norm_squared(std::size_t dim, const Scalar& c) {
  const Mode m = c.mode();
  std::vector<std::vector<Scalar>> a(dim, std::vector<Scalar>(dim, Scalar::integer(0, m)));
  for (std::size_t i = 0; i < dim; ++i) a[i][i] = c;
  return quadratic_form(std::move(a), Point::zeros(dim, m), Scalar::integer(0, m));
}

FunctionOracle FunctionOracle::power_abs(Scalar eps, double p) {
  if (eps.sign() <= 0) throw EvaluationError("power_abs needs eps > 0");
  if (!(p > 0) || !std::isfinite(p)) throw EvaluationError("power_abs needs p > 0");
  return FunctionOracle(PowerAbs{std::move(eps), p});
}

FunctionOracle FunctionOracle::sum(std::vector<FunctionOracle> terms) {
  if (terms.empty()) throw EvaluationError("sum oracle needs at least one term");
  std::optional<std::size_t> d;
  for (const auto& t : terms) {
    auto td = t.fixed_dim();
    if (d && td && *d != *td) throw DomainError("sum oracle terms differ in dimension");
    if (td) d = td;
  }
  return FunctionOracle(Sum{std::move(terms)});
}

Scalar FunctionOracle::operator()(const Point& x) const {
  const Mode mode = x.mode();
  return std::visit(
      [&](const auto& v) -> Scalar {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, QuadraticForm>) {
          const std::size_t d = v.a.size();
          if (x.dim() != d) throw DomainError("quadratic form evaluated at a point of wrong dimension");
          Scalar acc = v.c0.to_mode(mode);
          for (std::size_t i = 0; i < d; ++i) {
            Scalar row = Scalar::integer(0, mode);
            for (std::size_t j = 0; j < d; ++j)
              if (!v.a[i][j].is_zero()) row += v.a[i][j].to_mode(mode) * x[j];
            acc += x[i] * row;
            if (!v.b[i].is_zero()) acc += v.b[i].to_mode(mode) * x[i];
          }
          return acc;
        } else if constexpr (std::is_same_v<V, PowerAbs>) {
          const Scalar eps = v.eps.to_mode(mode);
          Scalar acc = Scalar::integer(0, mode);
          if (is_integer_exponent(v.p)) {
            for (const auto& xi : x) acc += pow_int(xi.abs(), static_cast<unsigned>(v.p));
            return eps * acc;
          }
          if (mode == Mode::Exact)
            throw ModeError("power_abs with non-integer p requires float mode");
          double s = 0;
          for (const auto& xi : x) s += std::pow(std::abs(xi.to_double()), v.p);
          return eps * Scalar(s);
        } else if constexpr (std::is_same_v<V, AbsVal>) {
          Scalar acc = Scalar::integer(0, mode);
          for (const auto& xi : x) acc += xi.abs();
          return acc;
        } else if constexpr (std::is_same_v<V, Tabulated>) {
          auto i = v.table.find(x);
          if (i) return v.table.values()[*i];
          if (auto value = v.table.lookup(x)) return *value;
          throw EvaluationError("tabulated function has no value at " + x.to_string());
        } else {
          Scalar acc = Scalar::integer(0, mode);
          for (const auto& term : v.terms) acc += term(x);
          return acc;
        }
      },
      v_);
}

std::optional<std::size_t> FunctionOracle::fixed_dim() const {
  return std::visit(
      [](const auto& v) -> std::optional<std::size_t> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, QuadraticForm>) return v.a.size();
        else if constexpr (std::is_same_v<V, Tabulated>) return v.table.dim();
        else if constexpr (std::is_same_v<V, Sum>) {
          for (const auto& t : v.terms)
            if (auto d = t.fixed_dim()) return d;
          return std::nullopt;
        } else return std::nullopt;
      },
      v_);
}

bool FunctionOracle::exact_capable() const {
  return std::visit(
      [](const auto& v) -> bool {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, PowerAbs>) return is_integer_exponent(v.p);
        else if constexpr (std::is_same_v<V, Tabulated>) return v.table.mode() == Mode::Exact;
        else if constexpr (std::is_same_v<V, Sum>) {
          for (const auto& t : v.terms)
            if (!t.exact_capable()) return false;
          return true;
        } else return true;
      },
      v_);
}

void FunctionOracle::require_mode(Mode mode, std::size_t dim) const {
  if (auto d = fixed_dim(); d && *d != dim)
    throw DomainError("function has dimension " + std::to_string(*d) + " but the domain has " +
                      std::to_string(dim));
  if (mode == Mode::Exact && !exact_capable())
    throw ModeError(describe() + " cannot be evaluated exactly; use float mode");
}

std::string FunctionOracle::describe() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, QuadraticForm>)
          return "quadratic_form(d=" + std::to_string(v.a.size()) + ")";
        else if constexpr (std::is_same_v<V, PowerAbs>)
          return "power_abs(eps=" + v.eps.to_string() + ", p=" + Scalar(v.p).to_string() + ")";
        else if constexpr (std::is_same_v<V, AbsVal>) return "abs";
        else if constexpr (std::is_same_v<V, Tabulated>)
          return "tabulated(" + std::to_string(v.table.size()) + " points)";
        else {
          std::string out = "sum(";
          for (std::size_t i = 0; i < v.terms.size(); ++i) {
            if (i != 0) out += ", ";
            out += v.terms[i].describe();
          }
          return out + ")";
        }
      },
      v_);
}

}  // namespace alphaconv
