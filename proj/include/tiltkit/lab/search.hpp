#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tiltkit/lab/certificate.hpp"
#include "tiltkit/lab/claim.hpp"
#include "tiltkit/rational.hpp"

namespace tiltkit::lab {

// Caps for the counterexample search and the randomized trial machinery.
struct SearchBudget {
    int max_support = 6;        // random exact instances
    int max_denominator = 12;   // integer weight cap before normalization
    std::vector<Rational> alpha_candidates;  // empty: the per-regime defaults
    int trial_limit = 20000;    // random phase cap
    double time_limit_seconds = 60.0;  // safety rail, checked between work chunks
    std::uint64_t seed = 0;
};

struct SearchStats {
    int preseeded_checked = 0;   // (instance, alpha) evaluations against catalogued cases
    int enumerated_checked = 0;  // ... against the deterministic small-instance grid
    int random_checked = 0;      // seeded random trials run
    bool timed_out = false;
    double elapsed_seconds = 0.0;  // informational; never serialized
};

struct SearchResult {
    std::optional<Certificate> certificate;
    bool exhausted = false;  // every phase completed (or hit its cap) without a find
    SearchStats stats;
};

// Index of the claim's cell in the canonical 28-cell catalogue; used to
// derive independent child seeds, so every cell's random stream is fixed by
// the budget seed alone.
std::size_t claim_index(const PreservationClaim& claim);

// The transform parameters a search or trial tries for this claim, in order:
// the budget's candidates restricted to the claim's regime, or the regime
// defaults when the budget gives none.
std::vector<Rational> candidate_alphas(const PreservationClaim& claim, const SearchBudget& budget);

// Draws one hypothesis-satisfying instance (trial_index seeds it) and checks
// the claim's property after the transform for every candidate alpha.
// Returns a certificate for the first alpha that breaks it, if any.
std::optional<Certificate> run_preservation_trial(const PreservationClaim& claim,
                                                  const SearchBudget& budget,
                                                  std::uint64_t trial_index);

// Three-phase counterexample search: catalogued instances for the cell
// first, then a deterministic grid of small exact instances, then seeded
// random instances.  Ties are broken by phase order and enumeration order,
// so the result is a pure function of claim and budget.
SearchResult search_counterexample(const PreservationClaim& claim, const SearchBudget& budget = {});

}  // namespace tiltkit::lab
