#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"

#include "alphaconv/domain.hpp"
#include "alphaconv/field.hpp"
#include "alphaconv/modulus.hpp"
#include "alphaconv/oracle.hpp"

namespace alphaconv {

// Field order is insertion order so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Readers throw SpecError carrying the JSON pointer of the offending node.
// Exact scalars are "p/q" strings (canonicalized on read); plain JSON
// numbers are accepted in both modes.

void check_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& path);
const Json& require(const Json& j, std::string_view key, const std::string& path);

Scalar scalar_from_json(const Json& j, Mode mode, const std::string& path);
double exponent_from_json(const Json& j, const std::string& path);
Point point_from_json(const Json& j, Mode mode, const std::string& path);
BoxDomain domain_from_json(const Json& j, Mode mode, const std::string& path);
FieldSpec field_from_json(const Json& j, const std::string& path);
TSet tset_from_json(const Json& j, Mode mode, const std::string& path);
Modulus modulus_from_json(const Json& j, Mode mode, double tol, const std::string& path);
FunctionOracle function_from_json(const Json& j, Mode mode, double tol, const std::string& path);

Json to_json(const Scalar& s);
Json to_json(const Point& p);
Json to_json(const BoxDomain& dom);
Json to_json(const FieldSpec& field);
Json to_json(const TSet& tset);
Json to_json(const Modulus& alpha);
Json to_json(const FunctionOracle& f);

}  // namespace alphaconv
