#include "tiltkit/lab/table.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "tiltkit/errors.hpp"

namespace tiltkit::lab {

namespace {

std::string witness_brief(const VerdictRecord& r) {
    if (r.j > 0) return "witness (" + std::to_string(r.j) + "," + std::to_string(r.k) + ")";
    return "witness k=" + std::to_string(r.k);
}

std::string found_brief(const Certificate& cert) {
    return "counterexample found (" + cert.provenance + ", alpha " + cert.alpha.alpha().str() + ", " +
           witness_brief(cert.conclusion) + ")";
}

void run_trials(CellReport& cr, const PreservationClaim& claim, int trials,
                const SearchBudget& budget) {
    for (int t = 0; t < trials; ++t) {
        auto cert = run_preservation_trial(claim, budget, static_cast<std::uint64_t>(t));
        ++cr.trials_run;
        if (cert) {
            cr.certificate = std::move(cert);
            return;
        }
        ++cr.trials_passed;
    }
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

}  // namespace

CellReport evaluate_table_cell(const PreservationClaim& claim, int trials,
                               const SearchBudget& budget) {
    if (trials < 1) throw Error("a survey needs at least one trial per cell");
    CellReport cr;
    cr.claim = claim;
    std::string trials_brief;
    switch (claim.expected) {
        case Expectation::preserved:
            run_trials(cr, claim, trials, budget);
            cr.ok = !cr.certificate && cr.trials_passed == trials;
            cr.outcome = std::to_string(cr.trials_passed) + "/" + std::to_string(trials) +
                         " trials pass";
            if (cr.certificate) cr.outcome += "; " + found_brief(*cr.certificate);
            break;
        case Expectation::not_preserved: {
            SearchResult sr = search_counterexample(claim, budget);
            cr.search_stats = sr.stats;
            cr.certificate = std::move(sr.certificate);
            cr.ok = cr.certificate.has_value();
            cr.outcome = cr.certificate ? found_brief(*cr.certificate)
                                        : "search exhausted without a counterexample";
            break;
        }
        case Expectation::unstated: {
            run_trials(cr, claim, trials, budget);
            trials_brief = std::to_string(cr.trials_passed) + "/" + std::to_string(trials) +
                           " trials pass";
            if (!cr.certificate) {
                SearchResult sr = search_counterexample(claim, budget);
                cr.search_stats = sr.stats;
                cr.certificate = std::move(sr.certificate);
            }
            cr.ok = true;  // nothing catalogued to contradict
            cr.outcome = trials_brief + "; " +
                         (cr.certificate ? found_brief(*cr.certificate)
                                         : "search exhausted without a counterexample");
            break;
        }
    }
    return cr;
}

TableReport preservation_table(int trials, const SearchBudget& budget, int threads) {
    if (trials < 1) throw Error("a survey needs at least one trial per cell");
    const auto& claims = all_claims();
    TableReport rep;
    rep.trials = trials;
    rep.seed = budget.seed;
    rep.cells.resize(claims.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= claims.size()) return;
            try {
                rep.cells[i] = evaluate_table_cell(claims[i], trials, budget);
            } catch (const Error& e) {
                rep.cells[i].claim = claims[i];
                rep.cells[i].ok = false;
                rep.cells[i].outcome = std::string("evaluation error: ") + e.what();
            }
        }
    };

    int n = std::clamp(threads, 1, static_cast<int>(claims.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    rep.all_ok = std::all_of(rep.cells.begin(), rep.cells.end(),
                             [](const CellReport& c) { return c.ok; });
    return rep;
}

std::string render_table_text(const TableReport& report) {
    constexpr std::size_t kCellWidth = 13;
    constexpr std::size_t kExpectedWidth = 15;
    std::string out = "preservation survey: trials=" + std::to_string(report.trials) +
                      " seed=" + std::to_string(report.seed) + "\n";
    int agreeing = 0;
    bool orders_started = false;
    auto header = [&](const char* title) {
        out += "\n";
        out += title;
        out += "\n  " + pad("cell", kCellWidth) + pad("expected", kExpectedWidth) + "outcome\n";
    };
    header("ageing properties");
    for (const CellReport& c : report.cells) {
        if (c.claim.is_order() && !orders_started) {
            orders_started = true;
            header("stochastic orders");
        }
        out += "  " + pad(c.claim.cell_id(), kCellWidth) +
               pad(expectation_name(c.claim.expected), kExpectedWidth) + c.outcome;
        if (!c.ok) out += "  << MISMATCH";
        out += "\n";
        agreeing += c.ok ? 1 : 0;
    }
    out += "\nsummary: " + std::to_string(agreeing) + "/" + std::to_string(report.cells.size()) +
           " cells agree with the catalogued tables\n";
    return out;
}

nlohmann::json table_to_json(const TableReport& report) {
    nlohmann::json cells = nlohmann::json::array();
    for (const CellReport& c : report.cells) {
        nlohmann::json cell{{"cell", c.claim.cell_id()},
                            {"expected", expectation_name(c.claim.expected)},
                            {"ok", c.ok},
                            {"outcome", c.outcome},
                            {"trials_run", c.trials_run},
                            {"trials_passed", c.trials_passed}};
        cell["certificate"] = c.certificate ? certificate_to_json(*c.certificate)
                                            : nlohmann::json(nullptr);
        if (c.search_stats) {
            cell["search"] = nlohmann::json{{"preseeded_checked", c.search_stats->preseeded_checked},
                                            {"enumerated_checked", c.search_stats->enumerated_checked},
                                            {"random_checked", c.search_stats->random_checked}};
        } else {
            cell["search"] = nullptr;
        }
        cells.push_back(std::move(cell));
    }
    return nlohmann::json{{"trials", report.trials},
                          {"seed", report.seed},
                          {"all_ok", report.all_ok},
                          {"cells", std::move(cells)}};
}

}  // namespace tiltkit::lab
