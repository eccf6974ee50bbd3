#include "report.hpp"

#include <cstdio>

#include "alphaconv/cli.hpp"

namespace alphaconv::cli {

std::string spec_hash(const Json& effective) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : effective.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const std::optional<Scalar>& s) { return s ? alphaconv::to_json(*s) : Json(nullptr); }

Json to_json(const Witness& w) {
  Json j = Json::object();
  if (w.x) j["x"] = alphaconv::to_json(*w.x);
  if (w.y) j["y"] = alphaconv::to_json(*w.y);
  if (w.t) j["t"] = alphaconv::to_json(*w.t);
  j["lhs"] = alphaconv::to_json(w.lhs);
  j["rhs"] = alphaconv::to_json(w.rhs);
  if (!w.extra.empty()) {
    Json extra = Json::array();
    for (const auto& [name, p] : w.extra) extra.push_back(Json{{"name", name}, {"point", alphaconv::to_json(p)}});
    j["extra"] = std::move(extra);
  }
  return j;
}

Json to_json(const CheckReport& r) {
  Json j = Json::object();
  j["verdict"] = std::string(to_string(r.verdict));
  j["samples_checked"] = r.samples_checked;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const DirectionalDerivative& d) {
  Json quotients = Json::array();
  for (std::size_t i = 0; i < d.ks.size(); ++i)
    quotients.push_back(Json{{"k", d.ks[i]}, {"q", alphaconv::to_json(d.quotients[i])}});
  return Json{{"value", alphaconv::to_json(d.value)},
              {"bracket", Json::array({alphaconv::to_json(d.bracket_lo), alphaconv::to_json(d.bracket_hi)})},
              {"lower_bound", to_json(d.lower_bound)},
              {"quotients", std::move(quotients)}};
}

Json to_json(const SupportResult& s) {
  Json j = Json::object();
  j["status"] = std::string(to_string(s.status));
  j["x0"] = alphaconv::to_json(s.x0);
  j["phi"] = s.phi ? alphaconv::to_json(s.phi->vector()) : Json(nullptr);
  j["constraints_used"] = s.constraints_used;
  Json cert = Json::array();
  for (const auto& [p, lambda] : s.certificate)
    cert.push_back(Json{{"point", alphaconv::to_json(p)}, {"multiplier", alphaconv::to_json(lambda)}});
  j["certificate"] = std::move(cert);
  j["verified"] = s.verified;
  return j;
}

Json to_json(const PositiveCycle& c, const MultiMap& phi) {
  Json nodes = Json::array();
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    const std::size_t i = c.nodes[k];
    nodes.push_back(Json{{"index", i},
                         {"point", alphaconv::to_json(phi.carrier()[i])},
                         {"functional", alphaconv::to_json(phi.values()[i][c.choices[k]].vector())}});
  }
  return Json{{"length", c.nodes.size()}, {"weight", alphaconv::to_json(c.weight)}, {"nodes", std::move(nodes)}};
}

Json to_json(const AmplifyResult& r) {
  Json j = Json::object();
  j["value"] = r.value ? alphaconv::to_json(*r.value) : Json("DIVERGES");
  j["evidence"] = std::string(to_string(r.evidence));
  j["truncation"] = r.truncation;
  j["argmax"] = to_json(r.argmax);
  return j;
}

Json report_header(std::string_view command, const Json& effective, Mode mode, double tolerance) {
  Json j = Json::object();
  j["tool"] = "alphaconv";
  j["version"] = std::string(kVersion);
  j["spec_hash"] = spec_hash(effective);
  j["command"] = std::string(command);
  j["mode"] = std::string(to_string(mode));
  j["tolerance"] = mode == Mode::Float ? tolerance : 0.0;
  return j;
}

}  // namespace alphaconv::cli
