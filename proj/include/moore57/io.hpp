#pragma once

// Text and JSON forms of the workbench's values. JSON goes through
// nlohmann::json; layouts are documented in docs/formats.md.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "moore57/block.hpp"
#include "moore57/constraints.hpp"
#include "moore57/drg.hpp"
#include "moore57/perm_search.hpp"
#include "moore57/solver.hpp"

namespace moore57 {

// 27 integers, comma/whitespace separated or as a JSON array.
Vec27 parse_solution(std::string_view text);
std::string format_vector(const Vec27& x, std::string_view sep = ",");
std::string format_coeffs(const Coeffs& n, std::string_view sep = ",");

nlohmann::json to_json(const IntersectionNumbers& p);
nlohmann::json to_json(const ConstraintSet& cons);
nlohmann::json to_json(const EnumerationResult& result);
nlohmann::json to_json(const PermSystem& sys);
nlohmann::json to_json(const HReport& rep);
nlohmann::json to_json(const MooreReport& rep);
nlohmann::json to_json(const std::vector<Violation>& violations);

// Inverse of to_json(PermSystem): {"degree": d, "theta": {"i,j": [1-based one-line]}}.
PermSystem perm_system_from_json(const nlohmann::json& j);

// Rows as text, each column right-aligned to its widest cell.
std::string aligned_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace moore57
