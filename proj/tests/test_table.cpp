#include <doctest.h>

#include "tiltkit/errors.hpp"
#include "tiltkit/lab/table.hpp"

#include "helpers.hpp"

using namespace tiltkit::lab;

namespace {

PreservationClaim cell(const char* id) {
    auto c = claim_from_cell_id(id);
    REQUIRE(c.has_value());
    return *c;
}

SearchBudget seeded(std::uint64_t seed) {
    SearchBudget b;
    b.seed = seed;
    return b;
}

}  // namespace

TEST_CASE("a survey needs at least one trial") {
    CHECK_THROWS_AS(evaluate_table_cell(cell("ifr:above"), 0, seeded(1)), tt::Error);
    CHECK_THROWS_AS(preservation_table(0, seeded(1)), tt::Error);
}

TEST_CASE("a preserved cell passes its randomized trials") {
    auto cr = evaluate_table_cell(cell("ifr:above"), 25, seeded(1));
    CHECK(cr.ok);
    CHECK(cr.trials_run == 25);
    CHECK(cr.trials_passed == 25);
    CHECK(!cr.certificate.has_value());
    CHECK(!cr.search_stats.has_value());
    CHECK(cr.outcome == "25/25 trials pass");
}

TEST_CASE("a refuted cell reports its certificate") {
    auto cr = evaluate_table_cell(cell("ilr:above"), 25, seeded(1));
    CHECK(cr.ok);
    CHECK(cr.trials_run == 0);  // no point sampling a cell the search refutes
    REQUIRE(cr.certificate.has_value());
    REQUIRE(cr.search_stats.has_value());
    CHECK(cr.outcome == "counterexample found (preseeded:ilr-alpha5, alpha 5, witness k=3)");
    CHECK(replay_certificate(*cr.certificate).matches);
}

TEST_CASE("the open cell reports both its trials and its exhausted search") {
    SearchBudget budget = seeded(1);
    budget.trial_limit = 64;
    auto cr = evaluate_table_cell(cell("nbafr:above"), 10, budget);
    CHECK(cr.ok);
    CHECK(cr.trials_run == 10);
    CHECK(cr.trials_passed == 10);
    CHECK(!cr.certificate.has_value());
    REQUIRE(cr.search_stats.has_value());
    CHECK(cr.outcome == "10/10 trials pass; search exhausted without a counterexample");
}

TEST_CASE("an expectation the data contradicts is flagged, not hidden") {
    // Claim (wrongly) that an increasing failure rate survives lowering:
    // the trials find a violating instance and the cell comes back not-ok.
    PreservationClaim wrong{tt::AgeingProperty::ifr, AlphaRegime::below_one, Expectation::preserved};
    auto cr = evaluate_table_cell(wrong, 200, seeded(1));
    CHECK(!cr.ok);
    REQUIRE(cr.certificate.has_value());
    CHECK(cr.trials_passed < cr.trials_run);
    CHECK(cr.outcome.find("trials pass; counterexample found (random:") != std::string::npos);
    CHECK(replay_certificate(*cr.certificate).matches);
}

TEST_CASE("the full survey agrees with the catalogued tables") {
    TableReport rep = preservation_table(10, seeded(1));
    CHECK(rep.all_ok);
    CHECK(rep.trials == 10);
    CHECK(rep.seed == 1);
    REQUIRE(rep.cells.size() == 28);
    for (std::size_t i = 0; i < rep.cells.size(); ++i) {
        INFO(rep.cells[i].claim.cell_id());
        CHECK(rep.cells[i].claim == all_claims()[i]);
        CHECK(rep.cells[i].ok);
    }
}

TEST_CASE("the survey text names every cell and ends with the tally") {
    TableReport rep = preservation_table(5, seeded(1));
    std::string text = render_table_text(rep);
    CHECK(text.find("preservation survey: trials=5 seed=1") == 0);
    CHECK(text.find("ageing properties") != std::string::npos);
    CHECK(text.find("stochastic orders") != std::string::npos);
    for (const auto& c : rep.cells) CHECK(text.find(c.claim.cell_id()) != std::string::npos);
    CHECK(text.find("summary: 28/28 cells agree with the catalogued tables") != std::string::npos);
    CHECK(text.find("MISMATCH") == std::string::npos);
}

TEST_CASE("the report is byte-identical whatever the thread count") {
    TableReport one = preservation_table(8, seeded(3), 1);
    TableReport four = preservation_table(8, seeded(3), 4);
    TableReport many = preservation_table(8, seeded(3), 32);
    CHECK(render_table_text(one) == render_table_text(four));
    CHECK(render_table_text(one) == render_table_text(many));
    CHECK(table_to_json(one).dump(2) == table_to_json(four).dump(2));
    CHECK(table_to_json(one).dump(2) == table_to_json(many).dump(2));
}

TEST_CASE("different seeds may differ, the same seed never does") {
    TableReport a = preservation_table(6, seeded(5));
    TableReport b = preservation_table(6, seeded(5));
    CHECK(table_to_json(a).dump() == table_to_json(b).dump());
}

TEST_CASE("the json view keeps exact search counters and omits wall-clock noise") {
    TableReport rep = preservation_table(5, seeded(1));
    auto j = table_to_json(rep);
    CHECK(j.at("trials") == 5);
    CHECK(j.at("seed") == 1);
    CHECK(j.at("all_ok") == true);
    REQUIRE(j.at("cells").size() == 28);

    const auto& first = j.at("cells").at(0);  // ilr:below, refuted by catalogue
    CHECK(first.at("cell") == "ilr:below");
    CHECK(first.at("expected") == "not-preserved");
    CHECK(first.at("ok") == true);
    CHECK(first.at("certificate").is_object());
    REQUIRE(first.at("search").is_object());
    CHECK(first.at("search").size() == 3);  // the three phase counters, nothing timing-dependent
    CHECK(first.at("search").contains("preseeded_checked"));
    CHECK(first.at("search").contains("enumerated_checked"));
    CHECK(first.at("search").contains("random_checked"));

    // A preserved cell records its trials and no certificate.
    const auto& ifr_above = j.at("cells").at(5);
    CHECK(ifr_above.at("cell") == "ifr:above");
    CHECK(ifr_above.at("certificate").is_null());
    CHECK(ifr_above.at("search").is_null());
    CHECK(ifr_above.at("trials_run") == 5);
}
