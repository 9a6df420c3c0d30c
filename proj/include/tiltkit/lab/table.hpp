#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tiltkit/lab/search.hpp"

namespace tiltkit::lab {

// The outcome of one catalogue cell in a survey run.
struct CellReport {
    PreservationClaim claim;
    int trials_run = 0;
    int trials_passed = 0;
    std::optional<Certificate> certificate;
    std::optional<SearchStats> search_stats;
    bool ok = false;      // the empirical outcome agrees with the catalogued expectation
    std::string outcome;  // one-line summary, deterministic for a fixed seed
};

struct TableReport {
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<CellReport> cells;  // catalogue order: ageing cells, then orders
    bool all_ok = false;
};

// Evaluates one cell: `preserved` cells run `trials` randomized
// hypothesis-satisfying instances (stopping at the first violation, which
// would disprove the expectation); `not_preserved` cells run the
// counterexample search; `unstated` cells run both and report what was seen.
CellReport evaluate_table_cell(const PreservationClaim& claim, int trials,
                               const SearchBudget& budget);

// The full 28-cell survey.  Cells are independent and deterministically
// seeded, so the report is byte-identical for a fixed seed regardless of
// the thread count.
TableReport preservation_table(int trials, const SearchBudget& budget, int threads = 1);

// Fixed-width text rendering (what the command-line `table` subcommand prints).
std::string render_table_text(const TableReport& report);

nlohmann::json table_to_json(const TableReport& report);

}  // namespace tiltkit::lab
