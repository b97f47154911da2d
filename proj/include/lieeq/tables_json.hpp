#pragma once

#include <json.hpp>

#include "lieeq/root_system.hpp"

namespace lieeq {

/// Debug export of a RootSystemTables bundle. Schema (version 1):
///   { "schema": "lieeq.tables/1", "group", "rank", "cartan": [[...]],
///     "symmetrizer", "positive_roots": [{"simple", "fw"}],
///     "weyl": [{"matrix": [[...]], "sign", "length"}], "w0": index,
///     "rho", "fundamental": [{"dimension", "dual_index", "self_dual"}],
///     "r1", "r2", "M", "dim_g" }
nlohmann::json tables_to_json(const RootSystemTables& t);

}  // namespace lieeq
