#include "problem.hpp"

#include <algorithm>
#include <map>

namespace alphaconv::cli {

namespace {

using Keys = std::vector<std::string_view>;

const std::map<std::string_view, CommandKeys>& table() {
  static const std::map<std::string_view, CommandKeys> t = {
      {"check", {{"domain", "function", "modulus"}, {"tset"}, {"grid"}}},
      {"jensen", {{"domain", "function", "modulus"}, {}, {"grid"}}},
      {"certify-subdivision", {{"domain", "function", "modulus"}, {}, {"x", "y", "n"}}},
      {"amplify", {{"modulus"}, {"field"}, {"u", "N"}}},
      {"feasible", {{"domain", "modulus"}, {}, {"N", "threshold", "grid"}}},
      {"validity", {{"modulus"}, {"domain"}, {"directions", "k_max", "threshold"}}},
      {"dirderiv", {{"domain", "function"}, {"field"}, {"x0", "h", "k_max"}}},
      {"sublinear", {{"domain", "function"}, {"field"}, {"x0", "directions", "k_max"}}},
      {"support", {{"domain", "function", "modulus"}, {}, {"x0", "sample", "grid"}}},
      {"harness-e", {{"domain", "function", "modulus"}, {"field"}, {"grid", "k_max"}}},
      {"subdiff", {{"domain", "function"}, {"field", "modulus"}, {"x0", "k_max", "phi", "sample", "grid"}}},
      {"monotone", {{"multimap", "modulus"}, {}, {"max_cycle_len"}}},
      {"reconstruct", {{"multimap", "modulus"}, {}, {"base_index"}}},
  };
  return t;
}

bool contains(const Keys& keys, std::string_view k) { return std::find(keys.begin(), keys.end(), k) != keys.end(); }

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

}  // namespace

const CommandKeys& command_keys(std::string_view command) {
  const auto it = table().find(command);
  if (it == table().end()) throw SpecError("", "unknown subcommand '" + std::string(command) + "'");
  return it->second;
}

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, keys] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

MultiMap multimap_from_json(const Json& j, Mode mode, const std::string& path) {
  if (!j.is_object()) throw SpecError(path, "expected an object");
  check_keys(j, {"carrier", "values"}, path);
  const Json& carrier = require(j, "carrier", path);
  const Json& values = require(j, "values", path);
  if (!carrier.is_array()) throw SpecError(path + "/carrier", "expected an array of points");
  if (!values.is_array()) throw SpecError(path + "/values", "expected an array of functional lists");
  std::vector<Point> xs;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    xs.push_back(point_from_json(carrier[i], mode, path + "/carrier/" + std::to_string(i)));
  std::vector<std::vector<LinearFunctional>> phis;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string vp = path + "/values/" + std::to_string(i);
    if (!values[i].is_array()) throw SpecError(vp, "expected a list of functionals");
    std::vector<LinearFunctional> list;
    for (std::size_t k = 0; k < values[i].size(); ++k)
      list.emplace_back(point_from_json(values[i][k], mode, vp + "/" + std::to_string(k)));
    phis.push_back(std::move(list));
  }
  return at_path(path, [&] { return MultiMap(std::move(xs), std::move(phis)); });
}

Json to_json(const MultiMap& phi) {
  Json carrier = Json::array();
  Json values = Json::array();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    carrier.push_back(alphaconv::to_json(phi.carrier()[i]));
    Json list = Json::array();
    for (const auto& f : phi.values()[i]) list.push_back(alphaconv::to_json(f.vector()));
    values.push_back(std::move(list));
  }
  return Json{{"carrier", std::move(carrier)}, {"values", std::move(values)}};
}

ProblemSpec ProblemSpec::load(Json doc, std::string_view command, const Overrides& overrides) {
  const CommandKeys& keys = command_keys(command);
  if (!doc.is_object()) throw SpecError("", "expected a JSON object");

  if (overrides.mode) doc["mode"] = std::string(to_string(*overrides.mode));
  if (overrides.tolerance) doc["tolerance"] = *overrides.tolerance;
  if (overrides.grid) {
    if (!contains(keys.params, "grid"))
      throw SpecError("/params/grid", "--grid does not apply to '" + std::string(command) + "'");
    doc["params"]["grid"] = *overrides.grid;
  }

  for (const auto& [key, value] : doc.items()) {
    const bool known = key == "version" || key == "mode" || key == "tolerance" || key == "params" ||
                       contains(keys.required, key) || contains(keys.optional, key);
    if (!known) throw SpecError("/" + key, "not used by '" + std::string(command) + "'");
  }
  for (const auto& key : keys.required)
    if (!doc.contains(key)) throw SpecError("/" + std::string(key), "required by '" + std::string(command) + "'");

  const Json& version = require(doc, "version", "");
  if (!version.is_string() || version.get<std::string>() != kSpecVersion)
    throw SpecError("/version", "unsupported spec version (expected \"" + std::string(kSpecVersion) + "\")");

  ProblemSpec spec;
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw SpecError("/mode", "expected \"exact\" or \"float\"");
    spec.mode_ = at_path("/mode", [&] { return parse_mode(doc["mode"].get<std::string>()); });
  }
  if (doc.contains("tolerance")) {
    const Json& t = doc["tolerance"];
    if (!t.is_number() || t.get<double>() < 0) throw SpecError("/tolerance", "expected a nonnegative number");
    spec.tolerance_ = t.get<double>();
  }
  if (doc.contains("params")) {
    const Json& p = doc["params"];
    if (!p.is_object()) throw SpecError("/params", "expected an object");
    for (const auto& [key, value] : p.items())
      if (!contains(keys.params, key))
        throw SpecError("/params/" + key, "not used by '" + std::string(command) + "'");
  }

  const Mode m = spec.mode_;
  const double tol = spec.tolerance_;
  if (doc.contains("domain")) spec.domain_ = domain_from_json(doc["domain"], m, "/domain");
  if (doc.contains("function")) spec.function_ = function_from_json(doc["function"], m, tol, "/function");
  if (doc.contains("modulus")) spec.modulus_ = modulus_from_json(doc["modulus"], m, tol, "/modulus");
  if (doc.contains("tset")) spec.tset_ = tset_from_json(doc["tset"], m, "/tset");
  if (doc.contains("field")) spec.field_ = field_from_json(doc["field"], "/field");
  if (doc.contains("multimap")) spec.multimap_ = multimap_from_json(doc["multimap"], m, "/multimap");

  // Mode and dimension guards up front, so evaluation never starts on a
  // spec that cannot be evaluated.
  std::optional<std::size_t> dim;
  if (spec.domain_) dim = spec.domain_->dim();
  else if (spec.multimap_) dim = spec.multimap_->dim();
  if (spec.function_ && dim) at_path("/function", [&] { spec.function_->require_mode(m, *dim); return 0; });
  if (spec.modulus_ && dim) at_path("/modulus", [&] { spec.modulus_->require_mode(m, *dim); return 0; });

  spec.doc_ = std::move(doc);
  return spec;
}

const BoxDomain& ProblemSpec::domain() const {
  if (!domain_) throw SpecError("/domain", "missing");
  return *domain_;
}

const FunctionOracle& ProblemSpec::function() const {
  if (!function_) throw SpecError("/function", "missing");
  return *function_;
}

const Modulus& ProblemSpec::modulus() const {
  if (!modulus_) throw SpecError("/modulus", "missing");
  return *modulus_;
}

const MultiMap& ProblemSpec::multimap() const {
  if (!multimap_) throw SpecError("/multimap", "missing");
  return *multimap_;
}

bool ProblemSpec::has_param(std::string_view key) const {
  return doc_.contains("params") && doc_["params"].contains(std::string(key));
}

const Json& ProblemSpec::param(std::string_view key) const {
  if (!has_param(key)) throw SpecError(param_path(key), "required");
  return doc_["params"][std::string(key)];
}

std::size_t ProblemSpec::param_count(std::string_view key) const {
  const Json& j = param(key);
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SpecError(param_path(key), "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::size_t ProblemSpec::param_count(std::string_view key, std::size_t fallback) const {
  return has_param(key) ? param_count(key) : fallback;
}

double ProblemSpec::param_real(std::string_view key, double fallback) const {
  if (!has_param(key)) return fallback;
  const Json& j = param(key);
  if (!j.is_number()) throw SpecError(param_path(key), "expected a number");
  return j.get<double>();
}

Point ProblemSpec::param_point(std::string_view key) const {
  return point_from_json(param(key), mode_, param_path(key));
}

std::vector<Point> ProblemSpec::param_points(std::string_view key) const {
  const Json& j = param(key);
  if (!j.is_array()) throw SpecError(param_path(key), "expected a list of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(point_from_json(j[i], mode_, param_path(key) + "/" + std::to_string(i)));
  return out;
}

}  // namespace alphaconv::cli
