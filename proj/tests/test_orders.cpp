#include <doctest.h>

#include "tiltkit/errors.hpp"
#include "tiltkit/finite_pmf.hpp"
#include "tiltkit/orders.hpp"
#include "tiltkit/tilt.hpp"

#include "helpers.hpp"

using tiltkit::check_order;
using tiltkit::FinitePmf;
using tiltkit::OrderRelation;
using tiltkit::Rational;
using tiltkit::Verdict;

namespace {

void check_fails_at(const Verdict<Rational>& v, int k, const std::string& lhs, const std::string& rhs) {
    CHECK(!v.holds);
    CHECK(v.j == 0);
    CHECK(v.k == k);
    CHECK(v.lhs == R(lhs));
    CHECK(v.rhs == R(rhs));
}

}  // namespace

TEST_CASE("usual stochastic order: pointwise survival comparison with witnesses") {
    FinitePmf a = pmf({"1/2", "1/2"});
    FinitePmf b = pmf({"0", "1/2", "1/2"});
    CHECK(check_order(OrderRelation::st, a, b).holds);
    check_fails_at(check_order(OrderRelation::st, b, a), 1, "1", "1/2");
    CHECK(check_order(OrderRelation::st, a, a).holds);
}

TEST_CASE("hazard order fixture survives its down-tilt (exact recomputation)") {
    // Ordered pair: survivals (1, 1/2, 2/5, 0) vs (1, 5/8, 11/20, 0).
    FinitePmf x1 = pmf({"0", "1/2", "1/10", "2/5"});
    FinitePmf x2 = pmf({"0", "3/8", "3/40", "11/20"});
    CHECK(x1.survival(2) == R("1/2"));
    CHECK(x2.survival(2) == R("5/8"));
    CHECK(check_order(OrderRelation::hr, x1, x2).holds);
    CHECK(tiltkit::check_order_hr_by_ratio(x1, x2).holds);

    FinitePmf y1 = tiltkit::tilt_pmf(x1, alpha("1/5"));
    FinitePmf y2 = tiltkit::tilt_pmf(x2, alpha("1/5"));
    CHECK(y1.survival(2) == R("1/6"));
    CHECK(y1.survival(3) == R("2/17"));
    CHECK(y2.survival(2) == R("1/4"));
    CHECK(y2.survival(3) == R("11/56"));

    // The transformed hazards are still pointwise ordered — this pair does
    // not witness a failure, in either formulation.
    CHECK(y1.hazard_at(2) == R("5/6"));
    CHECK(y2.hazard_at(2) == R("3/4"));
    CHECK(y1.hazard_at(3) == R("5/17"));
    CHECK(y2.hazard_at(3) == R("3/14"));
    CHECK(check_order(OrderRelation::hr, y1, y2).holds);
    CHECK(tiltkit::check_order_hr_by_ratio(y1, y2).holds);
}

TEST_CASE("hazard order is genuinely lost under a down-tilt on a flat-hazard pair") {
    FinitePmf x1 = pmf({"1/2", "1/4", "1/4"});
    FinitePmf x2 = pmf({"1/4", "3/8", "3/8"});
    CHECK(check_order(OrderRelation::hr, x1, x2).holds);
    CHECK(tiltkit::check_order_hr_by_ratio(x1, x2).holds);

    FinitePmf y1 = tiltkit::tilt_pmf(x1, alpha("1/5"));
    FinitePmf y2 = tiltkit::tilt_pmf(x2, alpha("1/5"));
    check_fails_at(check_order(OrderRelation::hr, y1, y2), 2, "5/8", "5/7");
    CHECK(!tiltkit::check_order_hr_by_ratio(y1, y2).holds);
    CHECK(tiltkit::check_order_hr_by_ratio(y1, y2).k == 2);
}

TEST_CASE("hazard order catches a shorter right tail at the end of the common support") {
    FinitePmf a = pmf({"1/2", "1/4", "1/4"});
    FinitePmf b = pmf({"1/2", "1/2"});
    check_fails_at(check_order(OrderRelation::hr, a, b), 2, "1/2", "1");
    check_fails_at(tiltkit::check_order_hr_by_ratio(a, b), 2, "0", "1/8");
    // The other direction holds: b dies no later than a everywhere.
    CHECK(check_order(OrderRelation::hr, b, a).holds);
    CHECK(tiltkit::check_order_hr_by_ratio(b, a).holds);
}

TEST_CASE("reversed hazard order is lost under an up-tilt on the exact fixture") {
    FinitePmf x1 = pmf({"0", "5/24", "7/24", "1/4", "1/4"});
    FinitePmf x2 = pmf({"0", "1/6", "1/4", "1/4", "1/3"});
    CHECK(check_order(OrderRelation::rhr, x1, x2).holds);
    CHECK(tiltkit::check_order_rhr_by_ratio(x1, x2).holds);

    FinitePmf y1 = tiltkit::tilt_pmf(x1, alpha("4"));
    FinitePmf y2 = tiltkit::tilt_pmf(x2, alpha("4"));
    CHECK(y1.cdf(2) == R("5/81"));
    CHECK(y1.cdf(3) == R("1/5"));
    CHECK(y1.cdf(4) == R("3/7"));
    CHECK(y2.cdf(2) == R("1/21"));
    CHECK(y2.cdf(3) == R("5/33"));
    CHECK(y2.cdf(4) == R("1/3"));

    check_fails_at(check_order(OrderRelation::rhr, y1, y2), 3, "56/81", "24/35");
    check_fails_at(tiltkit::check_order_rhr_by_ratio(y1, y2), 3, "1/105", "25/2673");
}

TEST_CASE("reversed hazard order rejects a later-starting left side at its first step") {
    FinitePmf at1 = pmf({"1"});
    FinitePmf at2 = pmf({"0", "1"});
    CHECK(check_order(OrderRelation::rhr, at1, at2).holds);
    check_fails_at(check_order(OrderRelation::rhr, at2, at1), 2, "1", "0");
    // Consistent with the likelihood-ratio order on the same pair.
    CHECK(check_order(OrderRelation::lr, at1, at2).holds);
    CHECK(!check_order(OrderRelation::lr, at2, at1).holds);
}

TEST_CASE("likelihood ratio order is lost under an up-tilt on the exact fixture") {
    FinitePmf x1 = pmf({"0", "3/10", "2/5", "1/5", "1/10"});
    FinitePmf x2 = pmf({"0", "1/5", "3/10", "1/5", "3/10"});
    CHECK(check_order(OrderRelation::lr, x1, x2).holds);

    FinitePmf y1 = tiltkit::tilt_pmf(x1, alpha("5"));
    FinitePmf y2 = tiltkit::tilt_pmf(x2, alpha("5"));
    CHECK(weight_strings(y1) == std::vector<std::string>{"0", "3/38", "50/209", "25/77", "5/14"});
    CHECK(weight_strings(y2) == std::vector<std::string>{"0", "1/21", "5/42", "5/33", "15/22"});

    auto v = check_order(OrderRelation::lr, y1, y2);
    CHECK(!v.holds);
    CHECK(v.j == 2);
    CHECK(v.k == 3);
    CHECK(v.lhs == R("50/4389"));
    CHECK(v.rhs == R("5/532"));
}

TEST_CASE("likelihood ratio order is lost under a down-tilt on the exact fixture") {
    FinitePmf x1 = pmf({"0", "3/10", "3/10", "1/5", "1/5"});
    FinitePmf x2 = pmf({"0", "1/5", "3/10", "6/25", "13/50"});
    CHECK(check_order(OrderRelation::lr, x1, x2).holds);

    FinitePmf y1 = tiltkit::tilt_pmf(x1, alpha("1/5"));
    FinitePmf y2 = tiltkit::tilt_pmf(x2, alpha("1/5"));
    CHECK(weight_strings(y1) == std::vector<std::string>{"0", "15/22", "75/374", "25/357", "1/21"});
    CHECK(weight_strings(y2) == std::vector<std::string>{"0", "5/9", "5/18", "10/99", "13/198"});

    auto v = check_order(OrderRelation::lr, y1, y2);
    CHECK(!v.holds);
    CHECK(v.j == 3);
    CHECK(v.k == 5);
    CHECK(v.lhs == R("5/378"));
    CHECK(v.rhs == R("325/24684"));
}

TEST_CASE("the two hazard-order formulations agree on assorted pairs") {
    auto pairs = std::vector<std::pair<FinitePmf, FinitePmf>>{
        {pmf({"1/2", "1/2"}), pmf({"1/4", "3/4"})},
        {pmf({"1/4", "3/4"}), pmf({"1/2", "1/2"})},
        {pmf({"1/2", "1/4", "1/4"}), pmf({"1/2", "1/2"})},
        {pmf({"1/3", "1/3", "1/3"}), pmf({"1/6", "1/3", "1/2"})},
        {pmf({"1"}), pmf({"0", "0", "1"})},
    };
    for (const auto& [a, b] : pairs) {
        CHECK(check_order(OrderRelation::hr, a, b).holds == tiltkit::check_order_hr_by_ratio(a, b).holds);
        CHECK(check_order(OrderRelation::rhr, a, b).holds == tiltkit::check_order_rhr_by_ratio(a, b).holds);
    }
}

TEST_CASE("implication chains hold on an ordered fixture pair") {
    FinitePmf x1 = pmf({"0", "3/10", "2/5", "1/5", "1/10"});
    FinitePmf x2 = pmf({"0", "1/5", "3/10", "1/5", "3/10"});
    REQUIRE(check_order(OrderRelation::lr, x1, x2).holds);
    CHECK(check_order(OrderRelation::hr, x1, x2).holds);
    CHECK(check_order(OrderRelation::rhr, x1, x2).holds);
    CHECK(check_order(OrderRelation::st, x1, x2).holds);
}

TEST_CASE("all four relations are reflexive") {
    for (const auto& d : {pmf({"1"}), pmf({"1/2", "1/2"}), pmf({"0", "1/3", "1/6", "1/2"})}) {
        for (auto rel : tiltkit::kAllOrderRelations) {
            CAPTURE(tiltkit::order_name(rel));
            CHECK(check_order(rel, d, d).holds);
        }
    }
}

TEST_CASE("mutual stochastic dominance forces equality") {
    FinitePmf a = pmf({"1/3", "1/3", "1/3"});
    FinitePmf b = pmf({"1/3", "1/3", "1/3"});
    CHECK(check_order(OrderRelation::st, a, b).holds);
    CHECK(check_order(OrderRelation::st, b, a).holds);
    CHECK(a == b);

    FinitePmf c = pmf({"1/3", "1/3", "0", "1/3"});
    // One direction must fail for distinct pmfs ordered both ways.
    bool both = check_order(OrderRelation::st, a, c).holds && check_order(OrderRelation::st, c, a).holds;
    CHECK(!both);
}

TEST_CASE("relation names round-trip") {
    for (auto rel : tiltkit::kAllOrderRelations) {
        auto back = tiltkit::order_from_name(tiltkit::order_name(rel));
        REQUIRE(back.has_value());
        CHECK(*back == rel);
    }
    CHECK(!tiltkit::order_from_name("total").has_value());
}
