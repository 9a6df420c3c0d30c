#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tiltkit/interchange.hpp"
#include "tiltkit/lab/claim.hpp"
#include "tiltkit/tilt.hpp"
#include "tiltkit/verdict.hpp"

namespace tiltkit::lab {

// A verdict with its witness values frozen to exact strings (canonical
// fraction form for exact checks, shortest-round-trip decimal for floating
// ones), so certificates survive serialization without losing a bit.
struct VerdictRecord {
    bool holds = true;
    int j = 0;
    int k = 0;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

template <typename V>
VerdictRecord make_record(const Verdict<V>& v) {
    if (v.holds) return {};
    return {false, v.j, v.k, format_value_precise(v.lhs), format_value_precise(v.rhs)};
}

// "holds" or "fails at k=3 (lhs ..., rhs ...)" / "fails at (j,k)=(1,3) ...".
std::string record_brief(const VerdictRecord& r);

// The two verdicts that decide one preservation trial: the hypothesis on the
// baseline distribution(s) and the same check after the tilt.
struct ClaimEvaluation {
    VerdictRecord hypothesis;
    VerdictRecord conclusion;
};

// Runs one preservation check end to end.  Ageing claims take exactly one
// baseline (finite pmf or parametric curve); order claims take exactly two
// finite pmfs.  The transform parameter must lie in the claim's regime.
ClaimEvaluation evaluate_claim_instance(const PreservationClaim& claim,
                                        const std::vector<DistributionSpec>& baselines,
                                        const std::optional<Window>& window,
                                        const TiltParameter& alpha);

// A self-contained, replayable refutation of one table cell: the baseline
// distribution(s), the transform parameter, the verified hypothesis, and the
// conclusion's failure witness.
struct Certificate {
    PreservationClaim claim;
    TiltParameter alpha;
    std::vector<DistributionSpec> baselines;
    std::optional<Window> window;
    VerdictRecord hypothesis;
    VerdictRecord conclusion;
    std::string provenance;  // "preseeded:<case>", "enumerated:<index>", "random:<trial>"
    std::uint64_t seed = 0;
};

// Evaluates the claim on the given instance and packages the result.
// Throws HypothesisError when the hypothesis fails, and Error when the
// conclusion still holds (there is nothing to certify).
Certificate make_certificate(const PreservationClaim& claim, std::vector<DistributionSpec> baselines,
                             std::optional<Window> window, const TiltParameter& alpha,
                             std::string provenance, std::uint64_t seed);

nlohmann::json verdict_record_to_json(const VerdictRecord& r);
VerdictRecord verdict_record_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

struct ReplayResult {
    bool matches = false;
    std::string detail;
};

// Recomputes both verdicts from the stored instance and compares them,
// field by field, against the stored records.
ReplayResult replay_certificate(const Certificate& cert);

}  // namespace tiltkit::lab
