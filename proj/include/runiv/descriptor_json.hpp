#pragma once

#include <json.hpp>

#include "runiv/decide.hpp"

namespace runiv {

/// JSON descriptor surface. Tagged objects, rationals as "p/q" strings,
/// places as "inf" or a prime rendered in base 10, Brauer classes as
/// [[place, numerator, denominator], ...]. See README for the full schema.
LieDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json descriptor_to_json(const LieDescriptor& desc);

LieDescriptor parse_descriptor(const std::string& text);
std::string serialize_descriptor(const LieDescriptor& desc);

// shared JSON renderings used by the CLI
nlohmann::json brauer_to_json(const BrauerClass& c);
BrauerClass brauer_from_json(const nlohmann::json& j);
nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace runiv
