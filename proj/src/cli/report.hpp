#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "alphaconv/json_io.hpp"
#include "alphaconv/modulus_ops.hpp"
#include "alphaconv/monotone.hpp"

namespace alphaconv::cli {

/// 64-bit FNV-1a of the compact dump, as 16 hex digits.
std::string spec_hash(const Json& effective);

Json to_json(const Witness& w);
Json to_json(const CheckReport& r);
Json to_json(const DirectionalDerivative& d);
Json to_json(const SupportResult& s);
Json to_json(const PositiveCycle& c, const MultiMap& phi);
Json to_json(const AmplifyResult& r);
Json to_json(const std::optional<Scalar>& s);  // null when absent

/// Header shared by every report; command fields are appended after it.
Json report_header(std::string_view command, const Json& effective, Mode mode, double tolerance);

}  // namespace alphaconv::cli
