#include "tiltkit/lab/search.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>

#include "tiltkit/errors.hpp"
#include "tiltkit/lab/generators.hpp"
#include "tiltkit/lab/registry.hpp"
#include "tiltkit/lab/rng.hpp"

namespace tiltkit::lab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// The deterministic grid stays small so the phase is cheap for every cell;
// it is still wide enough to contain refuting instances for every finite
// cell that has one (the pair grid in particular).
constexpr int kEnumMaxSupport = 4;
constexpr int kEnumMaxTotal = 8;
constexpr int kEnumPairSupport = 3;

std::optional<Certificate> try_alphas(const PreservationClaim& claim,
                                      const std::vector<DistributionSpec>& baselines,
                                      const std::optional<Window>& window,
                                      const std::vector<Rational>& alphas, std::string provenance,
                                      std::uint64_t seed, int& evaluations) {
    for (const Rational& a : alphas) {
        ++evaluations;
        TiltParameter t(a);
        ClaimEvaluation eval = evaluate_claim_instance(claim, baselines, window, t);
        if (!eval.hypothesis.holds) {
            throw Error("search instance lost its hypothesis (" + kind_name(claim.kind) +
                        "): " + record_brief(eval.hypothesis));
        }
        if (!eval.conclusion.holds) {
            return Certificate{claim,          t,    baselines,           window,
                               eval.hypothesis, eval.conclusion, std::move(provenance), seed};
        }
    }
    return std::nullopt;
}

}  // namespace

std::size_t claim_index(const PreservationClaim& claim) {
    const auto& claims = all_claims();
    for (std::size_t i = 0; i < claims.size(); ++i) {
        if (claims[i].cell_id() == claim.cell_id()) return i;
    }
    throw Error("claim " + claim.cell_id() + " is not a catalogue cell");
}

std::vector<Rational> candidate_alphas(const PreservationClaim& claim, const SearchBudget& budget) {
    std::vector<Rational> out;
    for (const Rational& a : budget.alpha_candidates) {
        if (alpha_in_regime(a, claim.regime)) out.push_back(a);
    }
    if (out.empty() && !budget.alpha_candidates.empty()) {
        throw Error("no budget alpha lies in the " + std::string(regime_name(claim.regime)) +
                    "-one regime");
    }
    if (out.empty()) out = default_alphas(claim.regime);
    return out;
}

std::optional<Certificate> run_preservation_trial(const PreservationClaim& claim,
                                                  const SearchBudget& budget,
                                                  std::uint64_t trial_index) {
    SplitMix64 rng = child_rng(budget.seed, claim_index(claim), trial_index);
    std::vector<DistributionSpec> baselines;
    std::optional<Window> window;
    if (claim.is_order()) {
        auto pair = random_pair_with(std::get<OrderRelation>(claim.kind), rng, budget.max_support,
                                     budget.max_denominator);
        baselines.emplace_back(std::move(pair.first));
        baselines.emplace_back(std::move(pair.second));
    } else {
        auto prop = std::get<AgeingProperty>(claim.kind);
        if (finite_hypothesis_feasible(prop)) {
            baselines.emplace_back(
                random_pmf_with(prop, rng, budget.max_support, budget.max_denominator));
        } else {
            CurveInstance inst = random_curve_with(prop, rng);
            baselines.emplace_back(std::move(inst.curve));
            window = inst.window;
        }
    }
    int evaluations = 0;
    return try_alphas(claim, baselines, window, candidate_alphas(claim, budget),
                      "random:" + std::to_string(trial_index), budget.seed, evaluations);
}

SearchResult search_counterexample(const PreservationClaim& claim, const SearchBudget& budget) {
    SearchResult res;
    const auto t0 = Clock::now();
    auto finish = [&](std::optional<Certificate> cert) {
        res.certificate = std::move(cert);
        res.exhausted = !res.certificate.has_value();
        res.stats.elapsed_seconds = seconds_since(t0);
        return res;
    };
    auto out_of_time = [&] {
        if (seconds_since(t0) <= budget.time_limit_seconds) return false;
        res.stats.timed_out = true;
        return true;
    };
    const std::vector<Rational> alphas = candidate_alphas(claim, budget);

    // Phase 0: catalogued instances for this cell, fixture parameter first.
    for (const auto& rc : reference_cases()) {
        if (rc.claim.cell_id() != claim.cell_id()) continue;
        std::vector<Rational> case_alphas{rc.alpha.alpha()};
        for (const Rational& a : alphas) {
            if (a != rc.alpha.alpha()) case_alphas.push_back(a);
        }
        auto cert = try_alphas(claim, rc.baselines, rc.window, case_alphas, "preseeded:" + rc.id,
                               budget.seed, res.stats.preseeded_checked);
        if (cert) return finish(std::move(cert));
    }

    // Phase 1: deterministic enumeration of small exact instances.
    if (!claim.is_order()) {
        auto prop = std::get<AgeingProperty>(claim.kind);
        if (finite_hypothesis_feasible(prop)) {
            PmfEnumerator en(std::min(kEnumMaxSupport, budget.max_support),
                             std::min(kEnumMaxTotal, budget.max_denominator));
            int idx = 0;
            while (auto d = en.next()) {
                if ((idx & 63) == 0 && out_of_time()) break;
                if (check_ageing(prop, *d).holds) {
                    std::vector<DistributionSpec> baselines{*d};
                    auto cert = try_alphas(claim, baselines, std::nullopt, alphas,
                                           "enumerated:" + std::to_string(idx), budget.seed,
                                           res.stats.enumerated_checked);
                    if (cert) return finish(std::move(cert));
                }
                ++idx;
            }
        }
    } else {
        auto rel = std::get<OrderRelation>(claim.kind);
        auto pool = enumerate_pmfs(std::min(kEnumPairSupport, budget.max_support),
                                   std::min(kEnumMaxTotal, budget.max_denominator));
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (out_of_time()) break;
            for (std::size_t j = 0; j < pool.size(); ++j) {
                if (!check_order(rel, pool[i], pool[j]).holds) continue;
                std::vector<DistributionSpec> baselines{pool[i], pool[j]};
                auto cert = try_alphas(
                    claim, baselines, std::nullopt, alphas,
                    "enumerated:" + std::to_string(i) + "," + std::to_string(j), budget.seed,
                    res.stats.enumerated_checked);
                if (cert) return finish(std::move(cert));
            }
        }
    }

    // Phase 2: seeded random instances.
    for (int t = 0; t < budget.trial_limit; ++t) {
        if ((t & 255) == 0 && out_of_time()) break;
        ++res.stats.random_checked;
        auto cert = run_preservation_trial(claim, budget, static_cast<std::uint64_t>(t));
        if (cert) return finish(std::move(cert));
    }
    return finish(std::nullopt);
}

}  // namespace tiltkit::lab
