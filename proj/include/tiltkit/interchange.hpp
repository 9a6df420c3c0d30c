#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "tiltkit/finite_pmf.hpp"
#include "tiltkit/parametric.hpp"

namespace tiltkit {

// A distribution as it travels through files, the CLI, and certificates:
// either an exact finite pmf or a parametric survival curve.
using DistributionSpec = std::variant<FinitePmf, ParametricSurvival>;

// {"support_start": 1, "weights": ["0", "1/10", ...]}
nlohmann::json pmf_to_json(const FinitePmf& d);

// {"family": "<name>", "params": {...}, "horizon": N}
nlohmann::json curve_to_json(const ParametricSurvival& c);

nlohmann::json distribution_to_json(const DistributionSpec& d);

FinitePmf pmf_from_json(const nlohmann::json& j);
ParametricSurvival curve_from_json(const nlohmann::json& j);

// Dispatches on the shape: "weights" selects the finite form, "family" the
// parametric one.  Anything else is a ParseError.
DistributionSpec distribution_from_json(const nlohmann::json& j);

// Reads and parses one distribution from a JSON file.
DistributionSpec load_distribution_file(const std::string& path);

// Shared accessors so generic code does not care which alternative it holds.
int distribution_last_index(const DistributionSpec& d);
std::string distribution_brief(const DistributionSpec& d);

}  // namespace tiltkit
