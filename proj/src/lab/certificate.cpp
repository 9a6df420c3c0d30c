#include "tiltkit/lab/certificate.hpp"

#include <utility>

#include "tiltkit/errors.hpp"

namespace tiltkit::lab {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw ParseError("certificate json: " + what); }

}  // namespace

std::string record_brief(const VerdictRecord& r) {
    if (r.holds) return "holds";
    std::string at = r.j > 0 ? "(j,k)=(" + std::to_string(r.j) + "," + std::to_string(r.k) + ")"
                             : "k=" + std::to_string(r.k);
    return "fails at " + at + " (lhs " + r.lhs + ", rhs " + r.rhs + ")";
}

ClaimEvaluation evaluate_claim_instance(const PreservationClaim& claim,
                                        const std::vector<DistributionSpec>& baselines,
                                        const std::optional<Window>& window,
                                        const TiltParameter& alpha) {
    if (!alpha_in_regime(alpha.alpha(), claim.regime)) {
        throw Error("transform parameter " + alpha.alpha().str() + " is outside the claim's " +
                    regime_name(claim.regime) + "-one regime");
    }
    if (claim.is_order()) {
        if (baselines.size() != 2) throw Error("order claims need exactly two baselines");
        const auto* a = std::get_if<FinitePmf>(&baselines[0]);
        const auto* b = std::get_if<FinitePmf>(&baselines[1]);
        if (!a || !b) throw Error("order claims are checked on exact finite pmfs");
        if (window) throw Error("order claims take no window");
        auto rel = std::get<OrderRelation>(claim.kind);
        ClaimEvaluation out;
        out.hypothesis = make_record(check_order(rel, *a, *b));
        out.conclusion = make_record(check_order(rel, tilt_pmf(*a, alpha), tilt_pmf(*b, alpha)));
        return out;
    }
    if (baselines.size() != 1) throw Error("ageing claims need exactly one baseline");
    auto prop = std::get<AgeingProperty>(claim.kind);
    ClaimEvaluation out;
    if (const auto* d = std::get_if<FinitePmf>(&baselines[0])) {
        out.hypothesis = make_record(check_ageing(prop, *d, window));
        out.conclusion = make_record(check_ageing(prop, tilt_pmf(*d, alpha), window));
    } else {
        const auto& curve = std::get<ParametricSurvival>(baselines[0]);
        out.hypothesis = make_record(check_ageing(prop, curve, window));
        out.conclusion = make_record(check_ageing(prop, tilt_curve(curve, alpha), window));
    }
    return out;
}

Certificate make_certificate(const PreservationClaim& claim, std::vector<DistributionSpec> baselines,
                             std::optional<Window> window, const TiltParameter& alpha,
                             std::string provenance, std::uint64_t seed) {
    ClaimEvaluation eval = evaluate_claim_instance(claim, baselines, window, alpha);
    if (!eval.hypothesis.holds) {
        throw HypothesisError("instance does not satisfy " + kind_name(claim.kind) + ": " +
                              record_brief(eval.hypothesis));
    }
    if (eval.conclusion.holds) {
        throw Error("nothing to certify: " + kind_name(claim.kind) + " still holds after the transform");
    }
    return Certificate{claim,          alpha,
                       std::move(baselines), window,
                       eval.hypothesis, eval.conclusion,
                       std::move(provenance), seed};
}

nlohmann::json verdict_record_to_json(const VerdictRecord& r) {
    if (r.holds) return json{{"holds", true}};
    return json{{"holds", false}, {"j", r.j}, {"k", r.k}, {"lhs", r.lhs}, {"rhs", r.rhs}};
}

VerdictRecord verdict_record_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("holds") || !j["holds"].is_boolean()) {
        bad("verdict needs a boolean \"holds\"");
    }
    if (j["holds"].get<bool>()) return {};
    for (const char* key : {"j", "k"}) {
        if (!j.contains(key) || !j[key].is_number_integer()) {
            bad(std::string("failed verdict needs integer \"") + key + "\"");
        }
    }
    for (const char* key : {"lhs", "rhs"}) {
        if (!j.contains(key) || !j[key].is_string()) {
            bad(std::string("failed verdict needs string \"") + key + "\"");
        }
    }
    return {false, j["j"].get<int>(), j["k"].get<int>(), j["lhs"].get<std::string>(),
            j["rhs"].get<std::string>()};
}

nlohmann::json certificate_to_json(const Certificate& c) {
    json baselines = json::array();
    for (const auto& d : c.baselines) baselines.push_back(distribution_to_json(d));
    json window = nullptr;
    if (c.window) window = json{{"lo", c.window->lo}, {"hi", c.window->hi}};
    return json{{"cell", c.claim.cell_id()},
                {"expected", expectation_name(c.claim.expected)},
                {"alpha", c.alpha.alpha().str()},
                {"baselines", std::move(baselines)},
                {"window", std::move(window)},
                {"hypothesis", verdict_record_to_json(c.hypothesis)},
                {"conclusion", verdict_record_to_json(c.conclusion)},
                {"provenance", c.provenance},
                {"seed", c.seed}};
}

Certificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object()) bad("expected an object");
    for (const char* key : {"cell", "alpha", "baselines", "hypothesis", "conclusion", "provenance"}) {
        if (!j.contains(key)) bad(std::string("missing \"") + key + "\"");
    }
    if (!j["cell"].is_string()) bad("\"cell\" must be a string like \"ifr:below\"");
    auto claim = claim_from_cell_id(j["cell"].get<std::string>());
    if (!claim) bad("unknown cell \"" + j["cell"].get<std::string>() + "\"");
    if (j.contains("expected") &&
        (!j["expected"].is_string() ||
         j["expected"].get<std::string>() != expectation_name(claim->expected))) {
        bad("\"expected\" disagrees with the catalogued table for " + claim->cell_id());
    }
    if (!j["alpha"].is_string()) bad("\"alpha\" must be a string fraction");
    TiltParameter alpha = [&] {
        try {
            return TiltParameter::parse(j["alpha"].get<std::string>());
        } catch (const Error& e) {
            bad(std::string("bad \"alpha\": ") + e.what());
        }
    }();
    if (!j["baselines"].is_array() || j["baselines"].empty()) bad("\"baselines\" must be a non-empty array");
    std::vector<DistributionSpec> baselines;
    for (const auto& item : j["baselines"]) baselines.push_back(distribution_from_json(item));
    std::optional<Window> window;
    if (j.contains("window") && !j["window"].is_null()) {
        const auto& w = j["window"];
        if (!w.is_object() || !w.contains("lo") || !w.contains("hi") ||
            !w["lo"].is_number_integer() || !w["hi"].is_number_integer()) {
            bad("\"window\" must be null or {\"lo\": int, \"hi\": int}");
        }
        window = Window{w["lo"].get<int>(), w["hi"].get<int>()};
    }
    VerdictRecord hypothesis = verdict_record_from_json(j["hypothesis"]);
    VerdictRecord conclusion = verdict_record_from_json(j["conclusion"]);
    if (!hypothesis.holds) bad("stored hypothesis must hold");
    if (conclusion.holds) bad("stored conclusion must fail (a certificate refutes a cell)");
    if (!j["provenance"].is_string()) bad("\"provenance\" must be a string");
    std::uint64_t seed = 0;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) bad("\"seed\" must be an integer");
        seed = j["seed"].get<std::uint64_t>();
    }
    return Certificate{*claim,     alpha,      std::move(baselines),
                       window,     hypothesis, conclusion,
                       j["provenance"].get<std::string>(), seed};
}

ReplayResult replay_certificate(const Certificate& cert) {
    ClaimEvaluation eval = [&] {
        try {
            return evaluate_claim_instance(cert.claim, cert.baselines, cert.window, cert.alpha);
        } catch (const Error& e) {
            throw Error(std::string("replay of ") + cert.claim.cell_id() + " failed to evaluate: " + e.what());
        }
    }();
    if (!(eval.hypothesis == cert.hypothesis)) {
        return {false, "hypothesis diverged: stored " + record_brief(cert.hypothesis) + ", recomputed " +
                           record_brief(eval.hypothesis)};
    }
    if (!(eval.conclusion == cert.conclusion)) {
        return {false, "conclusion diverged: stored " + record_brief(cert.conclusion) + ", recomputed " +
                           record_brief(eval.conclusion)};
    }
    return {true, "recomputed verdicts match the stored records"};
}

}  // namespace tiltkit::lab
