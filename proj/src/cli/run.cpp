#include "alphaconv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "problem.hpp"
#include "report.hpp"

namespace alphaconv::cli {

namespace {

struct Options {
  std::string spec_path;
  std::string numeric;       // global exact|float
  std::string mode;          // per-command exact|float, or pair|cyclic for monotone
  std::optional<double> tolerance;
  std::optional<std::size_t> grid;
  std::string emit = "json";
  std::string out_path;
  std::string op = "jensen";
  std::string sweep;
  bool quiet = false;
};

struct Outcome {
  Json report;
  int exit = kExitPass;
  std::optional<std::string> csv;
};

constexpr std::size_t kDefaultGrid = 8;

using Handler = std::function<Outcome(const ProblemSpec&, const Options&, Json)>;

int exit_for(Verdict v) { return v == Verdict::Pass ? kExitPass : kExitFail; }

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

std::string csv_point(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.dim(); ++i) out += (i ? ";" : "") + p[i].to_string();
  return out;
}

std::string csv_number(double v) { return Json(v).dump(); }

Outcome check_outcome(Json report, const CheckReport& r) {
  report["verdict"] = std::string(to_string(r.verdict));
  Json body = to_json(r);
  body.erase("verdict");
  merge(report, body);
  return {std::move(report), exit_for(r.verdict), std::nullopt};
}

Outcome cmd_check(const ProblemSpec& s, const Options&, Json report) {
  const std::size_t grid = s.param_count("grid", kDefaultGrid);
  const auto r = check_strong_convexity(s.function(), s.modulus(), s.domain(), s.tset(), grid, s.tolerance());
  report["grid"] = grid;
  return check_outcome(std::move(report), r);
}

Outcome cmd_jensen(const ProblemSpec& s, const Options&, Json report) {
  const std::size_t grid = s.param_count("grid", kDefaultGrid);
  const auto r = check_jensen(s.function(), s.modulus(), s.domain(), grid, s.tolerance());
  report["grid"] = grid;
  return check_outcome(std::move(report), r);
}

Outcome cmd_subdivision(const ProblemSpec& s, const Options&, Json report) {
  const std::size_t n = s.param_count("n");
  const auto r = subdivision_certificate(s.function(), s.modulus(), s.domain(), s.param_point("x"),
                                         s.param_point("y"), n, s.tolerance());
  report["n"] = n;
  Json coeff = Json::object();
  auto rationals = [](const std::vector<mpq_class>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(alphaconv::to_json(Scalar(q)));
    return a;
  };
  coeff["weights"] = rationals(r.coefficients.weights);
  coeff["net"] = rationals(r.coefficients.net);
  coeff["error_coefficient"] = alphaconv::to_json(Scalar(r.coefficients.error_coefficient));
  coeff["matches_expected"] = r.coefficients.matches_expected;
  report["direct"] = Json{{"lhs", alphaconv::to_json(r.direct_lhs)},
                          {"rhs", alphaconv::to_json(r.direct_rhs)},
                          {"holds", r.direct_holds}};
  report["coefficients"] = std::move(coeff);
  report["chain_sum_matches"] = r.chain_sum_matches;
  report["step_violations"] = r.step_violations;
  report["first_violated_step"] = r.first_violated_step ? Json(*r.first_violated_step) : Json(nullptr);
  return check_outcome(std::move(report), r.check);
}

Outcome cmd_amplify(const ProblemSpec& s, const Options& o, Json report) {
  const bool jensen = o.op == "jensen";
  const std::size_t n = s.param_count("N", kDefaultTruncation);
  const auto us = s.param_points("u");
  const AmplifiedModulus amp =
      jensen ? AmplifiedModulus::jensen(s.modulus(), n) : AmplifiedModulus::scaling(s.modulus(), s.field());

  bool diverges = false;
  Json results = Json::array();
  for (const auto& u : us) {
    const auto r = amp.at(u);
    diverges = diverges || r.diverges();
    Json row = Json{{"u", alphaconv::to_json(u)}};
    merge(row, to_json(r));
    results.push_back(std::move(row));
  }
  report["verdict"] = diverges ? "DIVERGES" : "Finite";
  report["op"] = o.op;
  report["closed_form"] = amp.closed_form() ? Json(amp.closed_form()->describe()) : Json(nullptr);
  report["results"] = std::move(results);
  Outcome out{std::move(report), diverges ? kExitFail : kExitPass, std::nullopt};

  if (o.emit == "csv") {
    // Convergence of the truncated sup: N = 1, 2, 4, ... and N itself.
    std::ostringstream csv;
    csv << "u,N,value,evidence\n";
    for (const auto& u : us) {
      std::vector<std::size_t> ns;
      if (jensen) {
        for (std::size_t k = 1; k < n; k *= 2) ns.push_back(k);
      }
      ns.push_back(jensen ? n : amp.truncation());
      for (std::size_t k : ns) {
        const auto r = jensen ? AmplifiedModulus::jensen(s.modulus(), k).at(u) : amp.at(u);
        csv << csv_point(u) << ',' << k << ',' << (r.value ? r.value->to_string() : "DIVERGES") << ','
            << to_string(r.evidence) << '\n';
      }
    }
    out.csv = csv.str();
  }
  return out;
}

Json feasibility_json(const FeasibilityResult& r) {
  Json j = Json::object();
  j["verdict"] = r.feasible ? "Feasible" : "Infeasible";
  j["evidence"] = std::string(to_string(r.evidence));
  j["witness_u"] = r.witness_u ? alphaconv::to_json(*r.witness_u) : Json(nullptr);
  j["witness_n"] = r.witness_n ? Json(*r.witness_n) : Json(nullptr);
  j["directions_scanned"] = r.directions_scanned;
  j["truncation"] = r.truncation;
  return j;
}

Outcome cmd_feasible(const ProblemSpec& s, const Options& o, Json report) {
  const std::size_t n = s.param_count("N", kDefaultTruncation);
  const double threshold = s.param_real("threshold", kDefaultDivergenceThreshold);
  const std::size_t per_axis = s.param_count("grid", 4);

  if (o.sweep.empty()) {
    const auto r = feasibility_check(s.modulus(), s.domain(), n, threshold, per_axis);
    merge(report, feasibility_json(r));
    return {std::move(report), r.feasible ? kExitPass : kExitFail, std::nullopt};
  }

  const auto* pn = std::get_if<Modulus::PowerNorm>(&s.modulus().variant());
  if (pn == nullptr) throw SpecError("/modulus", "--sweep needs a power_norm modulus");
  double lo = 0, hi = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(o.sweep);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0) || hi < lo)
    throw Error("--sweep expects lo:hi:step with step > 0 and lo <= hi");

  Json rows = Json::array();
  std::ostringstream csv;
  csv << "p,verdict,evidence\n";
  const auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    const double p = lo + static_cast<double>(i) * step;
    const auto r = feasibility_check(Modulus::power_norm(pn->eps, p), s.domain(), n, threshold, per_axis);
    Json row = Json{{"p", p}};
    merge(row, feasibility_json(r));
    csv << csv_number(p) << ',' << (r.feasible ? "Feasible" : "Infeasible") << ',' << to_string(r.evidence)
        << '\n';
    rows.push_back(std::move(row));
  }
  report["verdict"] = "Sweep";
  report["sweep"] = std::move(rows);
  return {std::move(report), kExitPass, o.emit == "csv" ? std::optional<std::string>(csv.str()) : std::nullopt};
}

Outcome cmd_validity(const ProblemSpec& s, const Options&, Json report) {
  std::vector<Point> dirs;
  if (s.has_param("directions")) {
    dirs = s.param_points("directions");
  } else if (s.maybe_domain()) {
    const std::size_t d = s.domain().dim();
    for (std::size_t i = 0; i < d; ++i) {
      dirs.push_back(Point::unit(d, i, s.mode()));
      dirs.push_back(-Point::unit(d, i, s.mode()));
    }
  } else {
    throw SpecError("/params/directions", "required when no domain is given");
  }
  const auto k_max = static_cast<unsigned>(s.param_count("k_max", kDefaultValidityDepth));
  const auto r = modulus_validity(s.modulus(), dirs, k_max, s.param_real("threshold", kDefaultTolerance));
  report["verdict"] = r.valid ? "Valid" : "Invalid";
  report["zero_at_origin"] = r.zero_at_origin;
  report["evidence"] = std::string(to_string(r.evidence));
  report["failing_direction"] = r.failing_direction ? alphaconv::to_json(*r.failing_direction) : Json(nullptr);
  Json tail = Json::array();
  for (const auto& t : r.last_terms) tail.push_back(alphaconv::to_json(t));
  report["last_terms"] = std::move(tail);
  return {std::move(report), r.valid ? kExitPass : kExitFail, std::nullopt};
}

unsigned k_max_of(const ProblemSpec& s) {
  return static_cast<unsigned>(s.param_count("k_max", kDefaultDerivativeDepth));
}

Outcome cmd_dirderiv(const ProblemSpec& s, const Options&, Json report) {
  const auto d = directional_derivative(s.function(), s.domain(), s.param_point("x0"), s.param_point("h"),
                                        s.field(), k_max_of(s), s.tolerance());
  report["verdict"] = "Pass";
  merge(report, to_json(d));
  return {std::move(report), kExitPass, std::nullopt};
}

Outcome cmd_sublinear(const ProblemSpec& s, const Options&, Json report) {
  const auto r = sublinearity_test(s.function(), s.domain(), s.param_point("x0"), s.param_points("directions"),
                                   s.field(), k_max_of(s), s.tolerance());
  return check_outcome(std::move(report), r);
}

std::vector<Point> sample_of(const ProblemSpec& s) {
  if (s.has_param("sample")) return s.param_points("sample");
  return sample_domain(s.domain(), s.param_count("grid", kDefaultGrid));
}

Outcome cmd_support(const ProblemSpec& s, const Options&, Json report) {
  const auto r = support_search(s.function(), s.modulus(), s.domain(), s.param_point("x0"), sample_of(s),
                                s.tolerance());
  report["verdict"] = std::string(to_string(r.status));
  merge(report, to_json(r));
  return {std::move(report), r.feasible() ? kExitPass : kExitFail, std::nullopt};
}

Outcome cmd_harness(const ProblemSpec& s, const Options&, Json report) {
  const std::size_t grid = s.param_count("grid", kDefaultGrid);
  const auto r = characterization_harness(s.function(), s.modulus(), s.domain(), s.field(), grid, k_max_of(s),
                                   s.tolerance());
  const Verdict common = r.convexity.verdict;
  report["verdict"] = r.agree ? std::string(to_string(common)) : "Disagree";
  report["agree"] = r.agree;
  report["grid"] = grid;
  report["convexity"] = to_json(r.convexity);
  report["derivative_inequality"] = to_json(r.derivative_inequality);
  report["support"] = to_json(r.support);
  report["caveat"] = r.caveat;
  return {std::move(report), r.agree ? exit_for(common) : kExitFail, std::nullopt};
}

Outcome cmd_subdiff(const ProblemSpec& s, const Options&, Json report) {
  const Point x0 = s.param_point("x0");
  const auto iv = subdiff_1d(s.function(), s.domain(), x0, s.field(), k_max_of(s), s.tolerance());
  Json interval = Json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"resolution", alphaconv::to_json(iv.resolution)}};
  if (!s.has_param("phi")) {
    report["verdict"] = "Pass";
    report["interval"] = std::move(interval);
    return {std::move(report), kExitPass, std::nullopt};
  }
  const LinearFunctional phi{s.param_point("phi")};
  const Modulus alpha = s.maybe_modulus().value_or(Modulus::zero());
  const auto r = check_strengthened_subgradient(s.function(), alpha, s.domain(), x0, phi, sample_of(s),
                                                s.tolerance());
  report["interval"] = std::move(interval);
  return check_outcome(std::move(report), r);
}

Outcome cmd_monotone(const ProblemSpec& s, const Options& o, Json report) {
  const MultiMap& phi = s.multimap();
  if (o.mode == "cyclic") {
    const std::size_t len = s.param_count("max_cycle_len", phi.size());
    const auto r = alpha_cyclic_monotone(phi, s.modulus(), len, s.tolerance());
    report["monotone_mode"] = "cyclic";
    report["max_cycle_len"] = len;
    report["deciders"] = Json{
        {"exhaustive", r.exhaustive_verdict ? Json(std::string(to_string(*r.exhaustive_verdict))) : Json("skipped")},
        {"relaxation", std::string(to_string(r.relaxation_verdict))}};
    report["cycle"] = r.cycle ? to_json(*r.cycle, phi) : Json(nullptr);
    return check_outcome(std::move(report), r.check);
  }
  report["monotone_mode"] = "pair";
  return check_outcome(std::move(report), alpha_monotone(phi, s.modulus(), s.tolerance()));
}

Outcome cmd_reconstruct(const ProblemSpec& s, const Options&, Json report) {
  const MultiMap& phi = s.multimap();
  const std::size_t base = s.param_count("base_index", 0);
  try {
    const auto r = reconstruct(phi, s.modulus(), base, s.tolerance());
    report["verdict"] = r.verified_subgradient ? "Pass" : "Fail";
    report["base_index"] = r.base_index;
    Json carrier = Json::array();
    Json values = Json::array();
    for (std::size_t i = 0; i < phi.size(); ++i) {
      carrier.push_back(alphaconv::to_json(phi.carrier()[i]));
      values.push_back(alphaconv::to_json(r.values[i]));
    }
    report["carrier"] = std::move(carrier);
    report["values"] = std::move(values);
    report["verified_subgradient"] = r.verified_subgradient;
    report["witness"] = r.violation ? to_json(*r.violation) : Json(nullptr);
    return {std::move(report), r.verified_subgradient ? kExitPass : kExitFail, std::nullopt};
  } catch (const PositiveCycleError& e) {
    report["verdict"] = "Fail";
    report["base_index"] = base;
    report["error"] = e.what();
    report["cycle"] = to_json(e.cycle(), phi);
    return {std::move(report), kExitFail, std::nullopt};
  }
}

struct Command {
  std::string_view name;
  std::string_view help;
  Handler handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> cs = {
      {"check", "check the strong (alpha,T)-convexity inequality on a grid", cmd_check},
      {"jensen", "check the strong alpha-Jensen inequality on a grid", cmd_jensen},
      {"certify-subdivision", "check the 2n-fold subdivision bound and its coefficient identity", cmd_subdivision},
      {"amplify", "evaluate the Jensen or scaling amplification of a modulus", cmd_amplify},
      {"feasible", "look for divergence of n^2 alpha(u/n)", cmd_feasible},
      {"validity", "check alpha(0) = 0 and alpha(th)/t -> 0", cmd_validity},
      {"dirderiv", "directional derivative from dyadic difference quotients", cmd_dirderiv},
      {"sublinear", "check sublinearity of the directional derivative", cmd_sublinear},
      {"support", "search a supporting functional with alpha error", cmd_support},
      {"harness-e", "compare the three characterizations of strong convexity", cmd_harness},
      {"subdiff", "one-dimensional subdifferential interval", cmd_subdiff},
      {"monotone", "alpha-monotonicity (pair) or alpha-cyclic monotonicity (cyclic) of a multimap", cmd_monotone},
      {"reconstruct", "potential from alpha-cyclically monotone data", cmd_reconstruct},
  };
  return cs;
}

Json read_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read spec file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecError("", std::string("invalid JSON: ") + e.what());
  }
}

std::string summary_of(const Json& report) {
  std::string s = report["command"].get<std::string>() + ": " + report["verdict"].get<std::string>();
  if (report.contains("samples_checked")) s += " (" + std::to_string(report["samples_checked"].get<std::size_t>()) + " samples)";
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks strong (alpha,F)-convexity, amplifies error moduli and tests alpha-monotone multimaps.",
               "alphaconv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Options o;
  app.add_option("--numeric", o.numeric, "numeric mode for every subcommand (exact|float)")
      ->check(CLI::IsMember({"exact", "float"}));

  for (const auto& c : commands()) {
    auto* sub = app.add_subcommand(std::string(c.name), std::string(c.help));
    sub->add_option("--spec", o.spec_path, "problem spec (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--tolerance", o.tolerance, "float-mode tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--emit", o.emit, "report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out_path, "write the report to this file instead of stdout");
    sub->add_flag("--quiet", o.quiet, "no summary line on stderr");
    if (c.name == "monotone") {
      sub->add_option("--mode", o.mode, "pair or cyclic")->check(CLI::IsMember({"pair", "cyclic"}));
    } else {
      sub->add_option("--mode", o.mode, "numeric mode (exact|float)")->check(CLI::IsMember({"exact", "float"}));
    }
    const auto& keys = command_keys(c.name);
    if (std::find(keys.params.begin(), keys.params.end(), "grid") != keys.params.end())
      sub->add_option("--grid", o.grid, "grid points per axis")->check(CLI::PositiveNumber);
    if (c.name == "amplify")
      sub->add_option("--op", o.op, "jensen or scaling")->check(CLI::IsMember({"jensen", "scaling"}));
    if (c.name == "feasible") sub->add_option("--sweep", o.sweep, "sweep the power_norm exponent, lo:hi:step");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto it = std::find_if(commands().begin(), commands().end(),
                               [&](const Command& c) { return c.name == command; });

  try {
    if (o.emit == "csv" && command != "amplify" && command != "feasible")
      throw Error("--emit csv is only available for amplify and feasible");
    if (o.emit == "csv" && command == "feasible" && o.sweep.empty())
      throw Error("--emit csv for feasible needs --sweep");

    Overrides ov;
    ov.tolerance = o.tolerance;
    ov.grid = o.grid;
    if (!o.numeric.empty()) ov.mode = parse_mode(o.numeric);
    if (command != "monotone" && !o.mode.empty()) ov.mode = parse_mode(o.mode);

    const ProblemSpec spec = ProblemSpec::load(read_spec(o.spec_path), command, ov);
    Json header = report_header(command, spec.effective(), spec.mode(), spec.tolerance());
    header["verdict"] = nullptr;
    Outcome outcome = it->handler(spec, o, std::move(header));

    std::ofstream file;
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) throw Error("cannot write '" + o.out_path + "'");
    }
    std::ostream& dest = o.out_path.empty() ? out : file;
    if (outcome.csv) dest << *outcome.csv;
    else dest << outcome.report.dump(2) << '\n';
    if (!o.quiet) err << summary_of(outcome.report) << '\n';
    return outcome.exit;
  } catch (const SpecError& e) {
    err << "error: spec " << (e.path().empty() ? "/" : "") << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace alphaconv::cli
