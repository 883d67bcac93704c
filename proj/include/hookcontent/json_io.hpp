#pragma once

#include <json.hpp>

#include "hookcontent/exact.hpp"
#include "hookcontent/polyid.hpp"
#include "hookcontent/probability.hpp"

// JSON forms of the library's reports. Every number is written as a decimal
// string so that big counts survive consumers with fixed-width integers.

namespace hcf {

/// {"num": "p", "den": "q"}
nlohmann::json exact_to_json(const Exact& value);

/// {n, lhs_terms, rhs_terms, equal, first_discrepancy}
nlohmann::json to_json(const poly::IdentityReport& report);

/// {shape, N, ratios: [3 rationals], p_value, consistent}
nlohmann::json to_json(const ProbabilityReport& report);

} // namespace hcf
