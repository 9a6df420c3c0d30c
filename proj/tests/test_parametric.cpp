#include <doctest.h>

#include <cmath>

#include "tiltkit/errors.hpp"
#include "tiltkit/parametric.hpp"

#include "helpers.hpp"

using tiltkit::ParametricSurvival;

TEST_CASE("factorial-tail curve: survival table and closed-form hazard 1 - c/k") {
    auto d = ParametricSurvival::salvia_bollinger(0.8, 30);
    CHECK(d.survival(0) == 1.0);
    CHECK(near(d.survival(1), 0.8, 1e-15));
    CHECK(near(d.survival(2), 0.32, 1e-15));
    CHECK(near(d.survival(3), 0.512 / 6.0, 1e-15));
    for (int k = 1; k <= 30; ++k) {
        CHECK(near(d.hazard_at(k), 1.0 - 0.8 / k, 1e-12));
    }
}

TEST_CASE("fractional-power geometric curve matches its formula") {
    auto d = ParametricSurvival::type1_discrete_weibull(0.5, 0.8, 60);
    for (int k = 1; k <= 60; ++k) {
        CHECK(near(d.survival(k), std::pow(0.5, std::pow(k, 0.8)), 1e-15));
    }
    CHECK(near(d.pmf(2), d.survival(1) - d.survival(2), 0.0));
}

TEST_CASE("damped-product curve: closed-form hazard p(1 - a^k)") {
    auto d = ParametricSurvival::discrete_s(0.3, 0.6, 60);
    CHECK(near(d.hazard_at(1), 0.3 * 0.4, 1e-13));
    CHECK(near(d.hazard_at(2), 0.3 * (1.0 - 0.36), 1e-13));
    for (int k = 1; k <= 60; ++k) {
        CHECK(near(d.hazard_at(k), 0.3 * (1.0 - std::pow(0.6, k)), 1e-12));
    }
}

TEST_CASE("polynomial-tail curve matches its formula") {
    auto d = ParametricSurvival::discrete_pareto(3.0, 2.0, 60);
    for (int k = 1; k <= 60; ++k) {
        CHECK(near(d.survival(k), std::pow(2.0 / (k + 2.0), 3.0), 1e-15));
    }
    CHECK(near(d.survival(1), 8.0 / 27.0, 1e-15));
}

TEST_CASE("survival is strictly decreasing and positive across the horizon") {
    auto check_curve = [](const ParametricSurvival& d) {
        for (int k = 1; k <= d.horizon(); ++k) {
            CHECK(d.survival(k) > 0.0);
            CHECK(d.survival(k) < d.survival(k - 1));
        }
    };
    check_curve(ParametricSurvival::salvia_bollinger(0.999, 100));
    check_curve(ParametricSurvival::type1_discrete_weibull(0.9, 1.2, 200));
    check_curve(ParametricSurvival::discrete_s(0.9, 0.3, 200));
    check_curve(ParametricSurvival::discrete_pareto(0.5, 5.0, 200));
}

TEST_CASE("parameter domains are enforced") {
    using tiltkit::InvalidParameterError;
    CHECK_THROWS_AS(ParametricSurvival::salvia_bollinger(0.0), InvalidParameterError);
    CHECK_THROWS_AS(ParametricSurvival::salvia_bollinger(1.5), InvalidParameterError);
    CHECK_THROWS_AS(ParametricSurvival::type1_discrete_weibull(1.0, 0.8), InvalidParameterError);
    CHECK_THROWS_AS(ParametricSurvival::type1_discrete_weibull(0.5, 0.0), InvalidParameterError);
    CHECK_THROWS_AS(ParametricSurvival::discrete_s(0.0, 0.5), InvalidParameterError);
    CHECK_THROWS_AS(ParametricSurvival::discrete_s(0.5, 1.0), InvalidParameterError);
    CHECK_THROWS_AS(ParametricSurvival::discrete_pareto(-1.0, 2.0), InvalidParameterError);
    CHECK_THROWS_AS(ParametricSurvival::discrete_pareto(3.0, 0.0), InvalidParameterError);
    CHECK_THROWS_AS(ParametricSurvival::discrete_pareto(3.0, 2.0, 0), InvalidParameterError);
}

TEST_CASE("the flat first step of the factorial-tail curve at c = 1 is refused") {
    // c = 1 gives F̄(1) = F̄(0) = 1: the first mass is zero and the survival
    // table is not strictly decreasing, so construction rejects it.
    CHECK_THROWS_AS(ParametricSurvival::salvia_bollinger(1.0, 10), tiltkit::InvalidParameterError);
}

TEST_CASE("a horizon deep enough to underflow the factorial tail is refused") {
    // 0.8^k / k! drops below the smallest double well before k = 200, so the
    // positivity check at construction must fire rather than let zeros leak
    // into later divisions.
    CHECK_THROWS_AS(ParametricSurvival::salvia_bollinger(0.8, 200), tiltkit::InvalidParameterError);
}

TEST_CASE("evaluation outside the horizon or below the domain is an error") {
    auto d = ParametricSurvival::discrete_pareto(3.0, 2.0, 40);
    CHECK(d.horizon() == 40);
    CHECK(d.last_index() == 40);
    CHECK_THROWS_AS(d.survival(41), tiltkit::HorizonExceededError);
    CHECK_THROWS_AS(d.pmf(41), tiltkit::HorizonExceededError);
    CHECK_THROWS_AS(d.survival(-1), tiltkit::BeyondSupportError);
    CHECK_THROWS_AS(d.pmf(0), tiltkit::BeyondSupportError);
    CHECK_THROWS_AS(d.hazard_at(0), tiltkit::BeyondSupportError);
}

TEST_CASE("reversed hazard of a parametric curve") {
    auto d = ParametricSurvival::discrete_pareto(3.0, 2.0, 40);
    double f1 = 1.0 - d.survival(1);
    CHECK(near(d.reversed_hazard_at(1), 1.0, 1e-15));  // f(1)/F(1) with all early mass at 1
    CHECK(near(d.reversed_hazard_at(2), d.pmf(2) / (f1 + d.pmf(2)), 1e-15));
}
