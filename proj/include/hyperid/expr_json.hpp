#pragma once

#include <json.hpp>

#include "hyperid/expr.hpp"

namespace hyperid::expr {

/// Nested tagged-object encoding, e.g.
///   {"k":"mul","a":[{"k":"num","v":"2"},{"k":"sym","v":"a"}]}
nlohmann::json to_json(const Ptr& e);

/// Inverse of to_json; throws SchemaError (with the given context string) on
/// malformed nodes.
Ptr from_json(const nlohmann::json& j, const std::string& context);

}  // namespace hyperid::expr
