#include "hookcontent/json_io.hpp"

namespace hcf {

nlohmann::json exact_to_json(const Exact& value)
{
    return {{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
}

nlohmann::json to_json(const poly::IdentityReport& report)
{
    nlohmann::json out;
    out["n"] = std::to_string(report.n);
    out["lhs_terms"] = std::to_string(report.lhs_terms);
    out["rhs_terms"] = std::to_string(report.rhs_terms);
    out["equal"] = report.equal;
    out["first_discrepancy"] = report.first_discrepancy ? nlohmann::json(*report.first_discrepancy) : nullptr;
    return out;
}

nlohmann::json to_json(const ProbabilityReport& report)
{
    nlohmann::json ratios = nlohmann::json::array();
    for (const auto& r : report.ratios)
        ratios.push_back(exact_to_json(r));
    nlohmann::json out;
    out["shape"] = report.shape.to_string();
    out["N"] = std::to_string(report.letters);
    out["ratios"] = std::move(ratios);
    out["p_value"] = exact_to_json(report.p_value);
    out["consistent"] = report.consistent;
    return out;
}

} // namespace hcf
