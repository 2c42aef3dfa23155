#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "fibrous/cw.hpp"
#include "fibrous/derivation.hpp"
#include "fibrous/simplicial.hpp"

namespace fibrous {

/// Derivation node as JSON: {"rule", "term", "chi", "children": [{"sign",
/// "level"?, "node"}]}. Children of alternating-sum nodes carry a "level":
/// {"type": "transitional", "at": i} or {"type": "running", "interval":
/// [j-1, j]}.
nlohmann::json derivation_to_json(const ChiDerivation& d);

/// The eval report: {"expr": ..., "chi": ..., "derivation": {...}}.
nlohmann::json eval_report_json(const std::string& expr, const ChiDerivation& d);

/// Complex file: {"maximal_simplices": [[int,...],...]}.
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// Skeleton file: {"cell_counts": [int,...]}.
CwSkeleton cw_from_json(const nlohmann::json& j);

/// Loads either file format, keyed by which field is present. Throws
/// IoError (unreadable), SchemaError (bad JSON or shape) or ComplexError
/// (well-shaped but invalid).
std::variant<SimplicialComplex, CwSkeleton> load_complex_file(const std::string& path);

} // namespace fibrous
