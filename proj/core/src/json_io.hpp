#pragma once

#include <json.hpp>

#include "utsforge/compact_sets.hpp"
#include "utsforge/polynomial.hpp"
#include "utsforge/scheduler.hpp"
#include "utsforge/transform.hpp"

namespace utsforge::detail {

using json = nlohmann::json;

// Decoders throw ConfigError with `where` as the field path.
double real_from(const json& j, const std::string& where);
Complex complex_from(const json& j, const std::string& where);
std::vector<Complex> complex_list_from(const json& j, const std::string& where);

TransformSpec transform_from(const json& j, const std::string& where);
CompactSetSpec set_from(const json& j, const std::string& where);
MuSpec mu_from(const json& j, const std::string& where);
ComplexPolynomial polynomial_from(const json& j, const std::string& where);

json to_json(Complex z);
json to_json(const std::vector<Complex>& zs);
json to_json(const TransformSpec& t);
json to_json(const CompactSetSpec& s);
json to_json(const MuSpec& mu);

}  // namespace utsforge::detail
