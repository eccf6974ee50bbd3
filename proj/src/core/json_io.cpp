#include "alphaconv/json_io.hpp"

#include <algorithm>

#include "alphaconv/errors.hpp"

namespace alphaconv {

namespace {

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

std::string type_tag(const Json& j, const std::string& path) {
  const Json& t = require(j, "type", path);
  if (!t.is_string()) throw SpecError(child(path, "type"), "expected a string");
  return t.get<std::string>();
}

std::size_t positive_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() <= 0)
    throw SpecError(path, "expected a positive integer");
  return j.get<std::size_t>();
}

// Rethrows library validation errors as SpecErrors anchored at path.
template <class F>
auto at_path(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(path, e.what());
  }
}

SampleTable table_from_json(const Json& j, Mode mode, double tol, const std::string& path) {
  const Json& pts = require(j, "points", path);
  const Json& vals = require(j, "values", path);
  if (!pts.is_array()) throw SpecError(child(path, "points"), "expected an array of points");
  if (!vals.is_array()) throw SpecError(child(path, "values"), "expected an array of scalars");
  std::vector<Point> points;
  std::vector<Scalar> values;
  for (std::size_t i = 0; i < pts.size(); ++i)
    points.push_back(point_from_json(pts[i], mode, child(child(path, "points"), i)));
  for (std::size_t i = 0; i < vals.size(); ++i)
    values.push_back(scalar_from_json(vals[i], mode, child(child(path, "values"), i)));
  Interpolation interp = Interpolation::None;
  if (j.contains("interpolation")) {
    const Json& r = j["interpolation"];
    if (!r.is_string()) throw SpecError(child(path, "interpolation"), "expected a string");
    interp = at_path(child(path, "interpolation"), [&] { return parse_interpolation(r.get<std::string>()); });
  }
  return at_path(path, [&] { return SampleTable(std::move(points), std::move(values), interp, tol); });
}

Json table_to_json(const SampleTable& t) {
  Json points = Json::array();
  Json values = Json::array();
  for (const auto& p : t.points()) points.push_back(to_json(p));
  for (const auto& v : t.values()) values.push_back(to_json(v));
  return Json{{"points", points}, {"values", values}, {"interpolation", std::string(to_string(t.interpolation()))}};
}

}  // namespace

void check_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& path) {
  if (!j.is_object()) throw SpecError(path.empty() ? "/" : path, "expected an object");
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      throw SpecError(child(path, item.key()), "unknown field");
  }
}

const Json& require(const Json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) throw SpecError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(std::string(key));
  if (it == j.end()) throw SpecError(child(path, key), "missing required field");
  return *it;
}

Scalar scalar_from_json(const Json& j, Mode mode, const std::string& path) {
  if (j.is_string()) return at_path(path, [&] { return Scalar::parse(j.get<std::string>(), mode); });
  if (j.is_number_integer()) return Scalar::integer(j.get<long>(), mode);
  if (j.is_number_float()) return at_path(path, [&] { return Scalar::from_double(j.get<double>(), mode); });
  throw SpecError(path, "expected a number or a \"p/q\" string");
}

double exponent_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return scalar_from_json(j, Mode::Float, path).to_double();
  throw SpecError(path, "expected an exponent");
}

Point point_from_json(const Json& j, Mode mode, const std::string& path) {
  if (j.is_number() || j.is_string()) return Point({scalar_from_json(j, mode, path)});
  if (!j.is_array() || j.empty()) throw SpecError(path, "expected a non-empty array of scalars");
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(scalar_from_json(j[i], mode, child(path, i)));
  return Point(std::move(coords));
}

BoxDomain domain_from_json(const Json& j, Mode mode, const std::string& path) {
  check_keys(j, {"lo", "hi"}, path);
  Point lo = point_from_json(require(j, "lo", path), mode, child(path, "lo"));
  Point hi = point_from_json(require(j, "hi", path), mode, child(path, "hi"));
  return at_path(path, [&] { return BoxDomain(std::move(lo), std::move(hi)); });
}

FieldSpec field_from_json(const Json& j, const std::string& path) {
  check_keys(j, {"kind", "sample_budget"}, path);
  FieldSpec f;
  const Json& kind = require(j, "kind", path);
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  if (k == "rationals") f.kind = FieldKind::Rationals;
  else if (k == "dyadics") f.kind = FieldKind::Dyadics;
  else if (k == "reals") f.kind = FieldKind::Reals;
  else throw SpecError(child(path, "kind"), "expected one of rationals, dyadics, reals");
  if (j.contains("sample_budget"))
    f.sample_budget = positive_integer(j["sample_budget"], child(path, "sample_budget"));
  return f;
}

TSet tset_from_json(const Json& j, Mode mode, const std::string& path) {
  const std::string type = type_tag(j, path);
  if (type == "jensen") {
    check_keys(j, {"type"}, path);
    return TSet::jensen();
  }
  if (type == "full_interval") {
    check_keys(j, {"type", "resolution"}, path);
    const std::size_t m = positive_integer(require(j, "resolution", path), child(path, "resolution"));
    if (m < 2) throw SpecError(child(path, "resolution"), "resolution must be >= 2");
    return TSet::full_interval(m);
  }
  if (type == "field") {
    check_keys(j, {"type", "field"}, path);
    return TSet::field_restricted(field_from_json(require(j, "field", path), child(path, "field")));
  }
  if (type == "explicit") {
    check_keys(j, {"type", "values"}, path);
    const Json& vals = require(j, "values", path);
    if (!vals.is_array()) throw SpecError(child(path, "values"), "expected an array");
    std::vector<Scalar> values;
    for (std::size_t i = 0; i < vals.size(); ++i)
      values.push_back(scalar_from_json(vals[i], mode, child(child(path, "values"), i)));
    return TSet::explicit_list(std::move(values));
  }
  throw SpecError(child(path, "type"), "unknown tset type '" + type + "'");
}

Modulus modulus_from_json(const Json& j, Mode mode, double tol, const std::string& path) {
  const std::string type = type_tag(j, path);
  if (type == "zero") {
    check_keys(j, {"type"}, path);
    return Modulus::zero();
  }
  if (type == "quadratic") {
    check_keys(j, {"type", "c"}, path);
    Scalar c = scalar_from_json(require(j, "c", path), mode, child(path, "c"));
    return at_path(path, [&] { return Modulus::quadratic(c); });
  }
  if (type == "power_norm") {
    check_keys(j, {"type", "eps", "p"}, path);
    Scalar eps = j.contains("eps") ? scalar_from_json(j["eps"], mode, child(path, "eps"))
                                   : Scalar::integer(1, mode);
    const double p = exponent_from_json(require(j, "p", path), child(path, "p"));
    return at_path(path, [&] { return Modulus::power_norm(eps, p); });
  }
  if (type == "sin_sq") {
    check_keys(j, {"type"}, path);
    return Modulus::sin_sq();
  }
  if (type == "tabulated") {
    check_keys(j, {"type", "points", "values", "interpolation"}, path);
    SampleTable table = table_from_json(j, mode, tol, path);
    return at_path(path, [&] { return Modulus::tabulated(std::move(table), tol); });
  }
  throw SpecError(child(path, "type"), "unknown modulus type '" + type + "'");
}

FunctionOracle function_from_json(const Json& j, Mode mode, double tol, const std::string& path) {
  const std::string type = type_tag(j, path);
  if (type == "quadratic_form") {
    check_keys(j, {"type", "A", "b", "c0"}, path);
    const Json& a = require(j, "A", path);
    if (!a.is_array() || a.empty()) throw SpecError(child(path, "A"), "expected a square matrix");
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_array()) throw SpecError(child(child(path, "A"), i), "expected a row");
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < a[i].size(); ++k)
        row.push_back(scalar_from_json(a[i][k], mode, child(child(child(path, "A"), i), k)));
      rows.push_back(std::move(row));
    }
    Point b = j.contains("b") ? point_from_json(j["b"], mode, child(path, "b")) : Point::zeros(rows.size(), mode);
    Scalar c0 = j.contains("c0") ? scalar_from_json(j["c0"], mode, child(path, "c0")) : Scalar::integer(0, mode);
    return at_path(path, [&] { return FunctionOracle::quadratic_form(std::move(rows), std::move(b), std::move(c0)); });
  }
  if (type == "power_abs") {
    check_keys(j, {"type", "eps", "p"}, path);
    Scalar eps = j.contains("eps") ? scalar_from_json(j["eps"], mode, child(path, "eps"))
                                   : Scalar::integer(1, mode);
    const double p = exponent_from_json(require(j, "p", path), child(path, "p"));
    return at_path(path, [&] { return FunctionOracle::power_abs(eps, p); });
  }
  if (type == "abs") {
    check_keys(j, {"type"}, path);
    return FunctionOracle::abs_val();
  }
  if (type == "tabulated") {
    check_keys(j, {"type", "points", "values", "interpolation"}, path);
    return FunctionOracle::tabulated(table_from_json(j, mode, tol, path));
  }
  if (type == "sum") {
    check_keys(j, {"type", "terms"}, path);
    const Json& terms = require(j, "terms", path);
    if (!terms.is_array()) throw SpecError(child(path, "terms"), "expected an array");
    std::vector<FunctionOracle> parts;
    for (std::size_t i = 0; i < terms.size(); ++i)
      parts.push_back(function_from_json(terms[i], mode, tol, child(child(path, "terms"), i)));
    return at_path(path, [&] { return FunctionOracle::sum(std::move(parts)); });
  }
  throw SpecError(child(path, "type"), "unknown function type '" + type + "'");
}

Json to_json(const Scalar& s) {
  if (s.is_exact()) return s.to_string();
  return s.to_double();
}

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_json(c));
  return out;
}

Json to_json(const BoxDomain& dom) { return Json{{"lo", to_json(dom.lo())}, {"hi", to_json(dom.hi())}}; }

Json to_json(const FieldSpec& field) {
  return Json{{"kind", std::string(to_string(field.kind))}, {"sample_budget", field.sample_budget}};
}

Json to_json(const TSet& tset) {
  return std::visit(
      [](const auto& v) -> Json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, TSet::JensenPoint>) return Json{{"type", "jensen"}};
        else if constexpr (std::is_same_v<V, TSet::FullInterval>)
          return Json{{"type", "full_interval"}, {"resolution", v.resolution}};
        else if constexpr (std::is_same_v<V, TSet::FieldRestricted>)
          return Json{{"type", "field"}, {"field", to_json(v.field)}};
        else {
          Json values = Json::array();
          for (const auto& t : v.values) values.push_back(to_json(t));
          return Json{{"type", "explicit"}, {"values", values}};
        }
      },
      tset.variant());
}

Json to_json(const Modulus& alpha) {
  return std::visit(
      [](const auto& v) -> Json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Modulus::Zero>) return Json{{"type", "zero"}};
        else if constexpr (std::is_same_v<V, Modulus::Quadratic>) return Json{{"type", "quadratic"}, {"c", to_json(v.c)}};
        else if constexpr (std::is_same_v<V, Modulus::PowerNorm>)
          return Json{{"type", "power_norm"}, {"eps", to_json(v.eps)}, {"p", v.p}};
        else if constexpr (std::is_same_v<V, Modulus::SinSq>) return Json{{"type", "sin_sq"}};
        else {
          Json out{{"type", "tabulated"}};
          out.update(table_to_json(v.table));
          return out;
        }
      },
      alpha.variant());
}

Json to_json(const FunctionOracle& f) {
  return std::visit(
      [](const auto& v) -> Json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, FunctionOracle::QuadraticForm>) {
          Json a = Json::array();
          for (const auto& row : v.a) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(to_json(x));
            a.push_back(r);
          }
          return Json{{"type", "quadratic_form"}, {"A", a}, {"b", to_json(v.b)}, {"c0", to_json(v.c0)}};
        } else if constexpr (std::is_same_v<V, FunctionOracle::PowerAbs>) {
          return Json{{"type", "power_abs"}, {"eps", to_json(v.eps)}, {"p", v.p}};
        } else if constexpr (std::is_same_v<V, FunctionOracle::AbsVal>) {
          return Json{{"type", "abs"}};
        } else if constexpr (std::is_same_v<V, FunctionOracle::Tabulated>) {
          Json out{{"type", "tabulated"}};
          out.update(table_to_json(v.table));
          return out;
        } else {
          Json terms = Json::array();
          for (const auto& t : v.terms) terms.push_back(to_json(t));
          return Json{{"type", "sum"}, {"terms", terms}};
        }
      },
      f.variant());
}

}  // namespace alphaconv
