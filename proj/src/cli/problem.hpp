#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphaconv/json_io.hpp"
#include "alphaconv/monotone.hpp"

namespace alphaconv::cli {

inline constexpr std::string_view kSpecVersion = "1";

/// Top-level and params keys a subcommand requires or accepts.
struct CommandKeys {
  std::vector<std::string_view> required;
  std::vector<std::string_view> optional;
  std::vector<std::string_view> params;
};

/// Throws SpecError for an unknown subcommand name.
const CommandKeys& command_keys(std::string_view command);
const std::vector<std::string_view>& command_names();

/// Flag values that replace the corresponding spec entries.
struct Overrides {
  std::optional<Mode> mode;
  std::optional<double> tolerance;
  std::optional<std::size_t> grid;
};

class ProblemSpec {
 public:
  /// Applies the overrides to the document, then validates it against the
  /// subcommand's key set and parses every present section.
  static ProblemSpec load(Json doc, std::string_view command, const Overrides& overrides);

  const Json& effective() const noexcept { return doc_; }
  Mode mode() const noexcept { return mode_; }
  double tolerance() const noexcept { return tolerance_; }

  const BoxDomain& domain() const;
  const FunctionOracle& function() const;
  const Modulus& modulus() const;
  const MultiMap& multimap() const;
  const std::optional<BoxDomain>& maybe_domain() const noexcept { return domain_; }
  const std::optional<Modulus>& maybe_modulus() const noexcept { return modulus_; }
  TSet tset() const { return tset_.value_or(TSet::full_interval(11)); }
  FieldSpec field() const { return field_.value_or(FieldSpec{}); }

  bool has_param(std::string_view key) const;
  std::size_t param_count(std::string_view key, std::size_t fallback) const;
  std::size_t param_count(std::string_view key) const;
  double param_real(std::string_view key, double fallback) const;
  Point param_point(std::string_view key) const;
  std::vector<Point> param_points(std::string_view key) const;

 private:
  ProblemSpec() = default;
  const Json& param(std::string_view key) const;
  std::string param_path(std::string_view key) const { return "/params/" + std::string(key); }

  Json doc_;
  Mode mode_ = Mode::Exact;
  double tolerance_ = kDefaultTolerance;
  std::optional<BoxDomain> domain_;
  std::optional<FunctionOracle> function_;
  std::optional<Modulus> modulus_;
  std::optional<TSet> tset_;
  std::optional<FieldSpec> field_;
  std::optional<MultiMap> multimap_;
};

MultiMap multimap_from_json(const Json& j, Mode mode, const std::string& path);
Json to_json(const MultiMap& phi);

}  // namespace alphaconv::cli
