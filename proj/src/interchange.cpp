#include "tiltkit/interchange.hpp"

#include <fstream>
#include <sstream>

#include "tiltkit/errors.hpp"

namespace tiltkit {

using nlohmann::json;

json pmf_to_json(const FinitePmf& d) {
    json weights = json::array();
    for (const auto& w : d.weights()) weights.push_back(w.str());
    return json{{"support_start", 1}, {"weights", std::move(weights)}};
}

json curve_to_json(const ParametricSurvival& c) {
    json params;
    switch (c.family()) {
        case Family::salvia_bollinger:
            params = {{"c", c.param1()}};
            break;
        case Family::type1_discrete_weibull:
            params = {{"q", c.param1()}, {"beta", c.param2()}};
            break;
        case Family::discrete_s:
            params = {{"p", c.param1()}, {"a", c.param2()}};
            break;
        case Family::discrete_pareto:
            params = {{"c", c.param1()}, {"d", c.param2()}};
            break;
    }
    return json{{"family", family_name(c.family())}, {"params", std::move(params)}, {"horizon", c.horizon()}};
}

json distribution_to_json(const DistributionSpec& d) {
    return std::visit(
        [](const auto& alt) {
            if constexpr (std::is_same_v<std::decay_t<decltype(alt)>, FinitePmf>) {
                return pmf_to_json(alt);
            } else {
                return curve_to_json(alt);
            }
        },
        d);
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ParseError("distribution json: " + msg); }

double need_number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        bad(std::string("missing numeric field '") + key + "'");
    }
    return j.at(key).get<double>();
}

}  // namespace

FinitePmf pmf_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights")) bad("finite form needs a 'weights' array");
    if (j.contains("support_start")) {
        if (!j.at("support_start").is_number_integer() || j.at("support_start").get<int>() != 1) {
            bad("only support_start = 1 is supported");
        }
    }
    const json& w = j.at("weights");
    if (!w.is_array() || w.empty()) bad("'weights' must be a non-empty array");
    std::vector<Rational> weights;
    weights.reserve(w.size());
    for (const auto& item : w) {
        if (!item.is_string()) bad("each weight must be a \"p/q\" string");
        weights.push_back(Rational::parse(item.get<std::string>()));
    }
    return FinitePmf::from_weights(std::move(weights));
}

ParametricSurvival curve_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
        bad("parametric form needs a 'family' string");
    }
    std::string fam = j.at("family").get<std::string>();
    int horizon = ParametricSurvival::kDefaultHorizon;
    if (j.contains("horizon")) {
        if (!j.at("horizon").is_number_integer()) bad("'horizon' must be an integer");
        horizon = j.at("horizon").get<int>();
    }
    const json params = j.contains("params") ? j.at("params") : json::object();
    if (fam == "salvia_bollinger") {
        return ParametricSurvival::salvia_bollinger(need_number(params, "c"), horizon);
    }
    if (fam == "type1_discrete_weibull") {
        return ParametricSurvival::type1_discrete_weibull(need_number(params, "q"),
                                                          need_number(params, "beta"), horizon);
    }
    if (fam == "discrete_s") {
        return ParametricSurvival::discrete_s(need_number(params, "p"), need_number(params, "a"), horizon);
    }
    if (fam == "discrete_pareto") {
        return ParametricSurvival::discrete_pareto(need_number(params, "c"), need_number(params, "d"), horizon);
    }
    bad("unknown family '" + fam + "'");
}

DistributionSpec distribution_from_json(const json& j) {
    if (j.is_object() && j.contains("weights")) return pmf_from_json(j);
    if (j.is_object() && j.contains("family")) return curve_from_json(j);
    bad("expected an object with either 'weights' or 'family'");
}

DistributionSpec load_distribution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open distribution file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return distribution_from_json(j);
}

int distribution_last_index(const DistributionSpec& d) {
    return std::visit([](const auto& alt) { return alt.last_index(); }, d);
}

std::string distribution_brief(const DistributionSpec& d) {
    if (std::holds_alternative<FinitePmf>(d)) {
        const auto& p = std::get<FinitePmf>(d);
        std::ostringstream os;
        os << "finite pmf on 1.." << p.last_index();
        return os.str();
    }
    const auto& c = std::get<ParametricSurvival>(d);
    std::ostringstream os;
    os << family_name(c.family()) << " curve, horizon " << c.horizon();
    return os.str();
}

}  // namespace tiltkit
