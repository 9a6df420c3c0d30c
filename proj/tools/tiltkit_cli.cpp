// Command-line front end: classify ageing behaviour, apply the odds tilt,
// compare distributions under stochastic orders, reproduce the catalogued
// counterexamples, hunt for fresh ones, and survey the preservation tables.
//
// Exit codes: 0 success; 1 a verdict-level failure (a reproduction mismatch,
// an exhausted search, a survey that disagrees with the catalogue); 2 usage
// or parse errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tiltkit/ageing.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/interchange.hpp"
#include "tiltkit/lab/certificate.hpp"
#include "tiltkit/lab/registry.hpp"
#include "tiltkit/lab/search.hpp"
#include "tiltkit/lab/table.hpp"
#include "tiltkit/orders.hpp"
#include "tiltkit/tilt.hpp"

namespace {

using nlohmann::json;
using namespace tiltkit;
using lab::VerdictRecord;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Window parse_window(const std::string& text) {
    auto sep = text.find("..");
    if (sep != std::string::npos) {
        try {
            std::size_t lo_end = 0;
            std::size_t hi_end = 0;
            int lo = std::stoi(text.substr(0, sep), &lo_end);
            std::string hi_part = text.substr(sep + 2);
            int hi = std::stoi(hi_part, &hi_end);
            if (lo_end == sep && hi_end == hi_part.size()) return Window{lo, hi};
        } catch (const std::exception&) {
        }
    }
    throw ParseError("--window must look like A..B with integer bounds (got \"" + text + "\")");
}

const FinitePmf& require_finite(const DistributionSpec& d, const std::string& file,
                                const std::string& why) {
    if (const auto* p = std::get_if<FinitePmf>(&d)) return *p;
    throw ParseError(file + ": " + why);
}

json record_json(const VerdictRecord& r) { return lab::verdict_record_to_json(r); }

// ---------------------------------------------------------------- classify --

int run_classify(const std::string& file, const std::optional<std::string>& window_text,
                 bool as_json) {
    DistributionSpec dist = load_distribution_file(file);
    std::optional<Window> window;
    if (window_text) window = parse_window(*window_text);

    std::vector<std::pair<AgeingProperty, VerdictRecord>> rows;
    std::vector<std::string> described;
    std::visit(
        [&](const auto& d) {
            auto verdicts = classify_all(d, window);
            for (const auto& [prop, verdict] : verdicts) {
                rows.emplace_back(prop, lab::make_record(verdict));
                described.push_back(describe(verdict));
            }
        },
        dist);

    if (as_json) {
        json out{{"distribution", distribution_to_json(dist)},
                 {"window", window ? json{{"lo", window->lo}, {"hi", window->hi}} : json(nullptr)},
                 {"verdicts", json::object()}};
        for (const auto& [prop, record] : rows) out["verdicts"][ageing_name(prop)] = record_json(record);
        emit(out);
        return 0;
    }

    std::cout << "distribution: " << distribution_brief(dist) << "\n";
    if (window) {
        std::cout << "window: " << window->lo << ".." << window->hi << "\n";
    } else {
        std::cout << "window: full support\n";
    }
    std::cout << "\nproperty  verdict\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string name = ageing_name(rows[i].first);
        name.append(10 - name.size(), ' ');
        std::cout << name << described[i] << "\n";
    }
    return 0;
}

// -------------------------------------------------------------------- tilt --

int run_tilt(const std::string& file, const std::string& alpha_text,
             const std::optional<std::string>& out_file) {
    DistributionSpec dist = load_distribution_file(file);
    const FinitePmf& d = require_finite(
        dist, file, "tilt emits exact weights, so it takes a finite pmf; curves are classified in place");
    TiltParameter alpha = TiltParameter::parse(alpha_text);
    json out = pmf_to_json(tilt_pmf(d, alpha));
    if (out_file) {
        std::ofstream sink(*out_file);
        if (!sink) throw ParseError(*out_file + ": cannot open for writing");
        sink << out.dump(2) << "\n";
        return 0;
    }
    emit(out);
    return 0;
}

// ------------------------------------------------------------------- order --

int run_order(const std::string& rel_text, const std::string& file1, const std::string& file2,
              const std::optional<std::string>& alpha_text, bool as_json) {
    auto rel = order_from_name(rel_text);
    if (!rel) throw ParseError("--rel must be one of st, hr, rhr, lr (got \"" + rel_text + "\")");
    DistributionSpec d1 = load_distribution_file(file1);
    DistributionSpec d2 = load_distribution_file(file2);
    const FinitePmf& a = require_finite(d1, file1, "order checks compare exact finite pmfs");
    const FinitePmf& b = require_finite(d2, file2, "order checks compare exact finite pmfs");

    auto before = check_order(*rel, a, b);
    std::optional<TiltParameter> alpha;
    std::optional<Verdict<Rational>> after;
    if (alpha_text) {
        alpha = TiltParameter::parse(*alpha_text);
        after = check_order(*rel, tilt_pmf(a, *alpha), tilt_pmf(b, *alpha));
    }

    if (as_json) {
        json out{{"relation", order_name(*rel)},
                 {"before", record_json(lab::make_record(before))},
                 {"alpha", alpha ? json(alpha->alpha().str()) : json(nullptr)},
                 {"after", after ? record_json(lab::make_record(*after)) : json(nullptr)}};
        emit(out);
        return 0;
    }

    std::cout << "relation: " << order_name(*rel) << "\n";
    std::cout << "before: " << describe(before) << "\n";
    if (after) {
        std::cout << "after (alpha " << alpha->alpha().str() << "): " << describe(*after) << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- reproduce --

int run_reproduce(const std::optional<std::string>& case_id, bool as_json) {
    std::vector<lab::CaseOutcome> outcomes;
    if (case_id) {
        const lab::ReferenceCase* c = lab::find_reference_case(*case_id);
        if (!c) {
            throw ParseError("unknown case \"" + *case_id +
                             "\"; `reproduce --all` lists every catalogued id");
        }
        outcomes.push_back(lab::reproduce_case(*c));
    } else {
        outcomes = lab::reproduce_all_cases();
    }

    int passed = 0;
    for (const auto& o : outcomes) passed += o.pass ? 1 : 0;
    bool all_pass = passed == static_cast<int>(outcomes.size());

    if (as_json) {
        json cases = json::array();
        for (const auto& o : outcomes) {
            cases.push_back({{"id", o.id}, {"pass", o.pass}, {"mismatches", o.mismatches}});
        }
        emit(json{{"cases", std::move(cases)},
                  {"passed", passed},
                  {"total", outcomes.size()},
                  {"all_pass", all_pass}});
        return all_pass ? 0 : 1;
    }

    for (const auto& o : outcomes) {
        std::cout << o.id << ": " << (o.pass ? "pass" : "FAIL") << "\n";
        for (const auto& m : o.mismatches) std::cout << "  " << m << "\n";
    }
    std::cout << passed << "/" << outcomes.size() << " cases pass\n";
    return all_pass ? 0 : 1;
}

// ------------------------------------------------------------------ search --

int run_search(const std::string& cell, const lab::SearchBudget& budget,
               const std::vector<std::string>& alpha_texts, bool as_json) {
    auto claim = lab::claim_from_cell_id(cell);
    if (!claim) {
        throw ParseError("unknown cell \"" + cell +
                         "\"; cells pair a property with a regime, e.g. ifr:below or hr:above");
    }
    lab::SearchBudget b = budget;
    for (const auto& text : alpha_texts) b.alpha_candidates.push_back(TiltParameter::parse(text).alpha());

    lab::SearchResult res = lab::search_counterexample(*claim, b);
    json stats{{"preseeded_checked", res.stats.preseeded_checked},
               {"enumerated_checked", res.stats.enumerated_checked},
               {"random_checked", res.stats.random_checked}};

    if (as_json) {
        emit(json{{"cell", claim->cell_id()},
                  {"found", res.certificate.has_value()},
                  {"certificate",
                   res.certificate ? lab::certificate_to_json(*res.certificate) : json(nullptr)},
                  {"stats", std::move(stats)}});
        return res.certificate ? 0 : 1;
    }

    std::cout << "search: " << claim->cell_id() << " (expected "
              << expectation_name(claim->expected) << ")\n";
    if (res.certificate) {
        std::cout << "counterexample found: " << res.certificate->provenance << ", alpha "
                  << res.certificate->alpha.alpha().str() << "\n";
        std::cout << "conclusion: " << lab::record_brief(res.certificate->conclusion) << "\n";
        std::cout << lab::certificate_to_json(*res.certificate).dump(2) << "\n";
        return 0;
    }
    std::cout << "exhausted: no counterexample within budget (preseeded "
              << res.stats.preseeded_checked << ", enumerated " << res.stats.enumerated_checked
              << ", random trials " << res.stats.random_checked << ")\n";
    return 1;
}

// ------------------------------------------------------------------- table --

int run_table(int trials, const lab::SearchBudget& budget, int threads, bool as_json) {
    lab::TableReport rep = lab::preservation_table(trials, budget, threads);
    if (as_json) {
        emit(lab::table_to_json(rep));
    } else {
        std::cout << lab::render_table_text(rep);
    }
    return rep.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proportional-odds analysis toolkit for discrete distributions"};
    app.require_subcommand(1);

    std::string dist_file;
    std::string dist_file2;
    std::string alpha_text;
    std::string window_text;
    std::string out_file;
    std::string rel_text;
    std::string case_id;
    std::string cell;
    std::vector<std::string> alpha_list;
    bool as_json = false;
    bool all_cases = false;
    int trials = 1000;
    int threads = 1;
    lab::SearchBudget budget;

    auto* classify = app.add_subcommand("classify", "Run every ageing check on a distribution");
    classify->add_option("--dist", dist_file, "distribution file (interchange JSON)")->required();
    auto* window_opt = classify->add_option("--window", window_text, "restrict the checks to A..B");
    classify->add_flag("--json", as_json, "machine-readable output");

    auto* tilt = app.add_subcommand("tilt", "Apply the odds tilt to an exact pmf");
    tilt->add_option("--dist", dist_file, "finite pmf file (interchange JSON)")->required();
    tilt->add_option("--alpha", alpha_text, "transform parameter as P/Q")->required();
    auto* out_opt = tilt->add_option("--out", out_file, "write the tilted pmf here instead of stdout");
    tilt->add_flag("--json", as_json, "machine-readable output (the tilted pmf is always JSON)");

    auto* order = app.add_subcommand("order", "Check a stochastic order, optionally after a tilt");
    order->add_option("--rel", rel_text, "relation: st, hr, rhr, or lr")->required();
    order->add_option("--d1", dist_file, "left finite pmf file")->required();
    order->add_option("--d2", dist_file2, "right finite pmf file")->required();
    auto* order_alpha = order->add_option("--alpha", alpha_text, "also check after tilting both sides");
    order->add_flag("--json", as_json, "machine-readable output");

    auto* reproduce = app.add_subcommand("reproduce", "Recompute the catalogued counterexamples");
    auto* case_opt = reproduce->add_option("--case", case_id, "a single case id");
    auto* all_opt = reproduce->add_flag("--all", all_cases, "every case (the default)");
    case_opt->excludes(all_opt);
    reproduce->add_flag("--json", as_json, "machine-readable output");

    auto* search = app.add_subcommand("search", "Hunt for a counterexample to one table cell");
    search->add_option("--claim", cell, "cell id, e.g. ifr:below")->required();
    search->add_option("--seed", budget.seed, "random-phase seed")->envname("MO_SEED");
    search->add_option("--trials", budget.trial_limit, "random-phase trial cap");
    search->add_option("--max-support", budget.max_support, "largest random support size");
    search->add_option("--max-denominator", budget.max_denominator, "largest random weight denominator");
    search->add_option("--alpha", alpha_list, "candidate parameter (repeatable; defaults per regime)");
    search->add_option("--time-limit", budget.time_limit_seconds, "safety cap in seconds");
    search->add_flag("--json", as_json, "machine-readable output");

    auto* table = app.add_subcommand("table", "Survey all 28 preservation cells");
    table->add_option("--trials", trials, "randomized trials per preserved cell");
    table->add_option("--seed", budget.seed, "seed for every cell's trial stream")->envname("MO_SEED");
    table->add_option("--threads", threads, "worker threads (the report does not depend on this)");
    table->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) {
            return run_classify(dist_file,
                                *window_opt ? std::optional<std::string>(window_text) : std::nullopt,
                                as_json);
        }
        if (tilt->parsed()) {
            return run_tilt(dist_file, alpha_text,
                            *out_opt ? std::optional<std::string>(out_file) : std::nullopt);
        }
        if (order->parsed()) {
            return run_order(rel_text, dist_file, dist_file2,
                             *order_alpha ? std::optional<std::string>(alpha_text) : std::nullopt,
                             as_json);
        }
        if (reproduce->parsed()) {
            return run_reproduce(*case_opt ? std::optional<std::string>(case_id) : std::nullopt,
                                 as_json);
        }
        if (search->parsed()) return run_search(cell, budget, alpha_list, as_json);
        if (table->parsed()) return run_table(trials, budget, threads, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
