#pragma once

#include "dcq/symexpr/expr.hpp"

#include <json.hpp>

namespace dcq {

/// JSON tree form: {"kind": ..., "children"|"name"|"value"|"deps"|"orders"}.
nlohmann::json to_json(const Expr& e);
Expr from_json(const nlohmann::json& j);

}  // namespace dcq
