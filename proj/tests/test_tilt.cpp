#include <doctest.h>

#include <vector>

#include "tiltkit/errors.hpp"
#include "tiltkit/finite_pmf.hpp"
#include "tiltkit/parametric.hpp"
#include "tiltkit/rational.hpp"
#include "tiltkit/tilt.hpp"

#include "helpers.hpp"

using tiltkit::FinitePmf;
using tiltkit::ParametricSurvival;
using tiltkit::Rational;
using tiltkit::TiltParameter;

TEST_CASE("tilt parameter validation and composition") {
    CHECK_THROWS_AS(TiltParameter(Rational(0)), tiltkit::InvalidTiltParameterError);
    CHECK_THROWS_AS(TiltParameter(R("-1/2")), tiltkit::InvalidTiltParameterError);
    CHECK(alpha("1").is_identity());
    CHECK(alpha("5").raises());
    CHECK(alpha("1/5").lowers());
    CHECK(alpha("2/5").alpha_bar() == R("3/5"));
    CHECK(compose(alpha("2"), alpha("3")).alpha() == Rational(6));
    CHECK(compose(alpha("5"), alpha("1/5")).is_identity());
}

TEST_CASE("pointwise survival transform on spot values") {
    CHECK(tiltkit::tilted_survival_value(R("1/2"), R("1/5")) == R("1/6"));
    CHECK(tiltkit::tilted_survival_value(R("1/2"), R("5")) == R("5/6"));
    CHECK(tiltkit::tilted_survival_value(R("1"), R("7/3")) == Rational(1));
    CHECK(tiltkit::tilted_survival_value(R("0"), R("7/3")) == Rational(0));
    CHECK(tiltkit::tilted_survival_value(R("3/4"), R("1")) == R("3/4"));
}

namespace {

struct FiniteFixture {
    std::vector<std::string> base;
    std::string a;
    std::vector<std::string> tilted;
};

// Exact transformed pmfs for the four log-concavity/log-convexity reference
// distributions, frozen from an independent recomputation.
const std::vector<FiniteFixture> kFiniteFixtures = {
    {{"0", "1/10", "1/4", "7/20", "3/10"}, "5", {"0", "1/46", "125/1656", "175/792", "15/22"}},
    {{"0", "3/10", "17/50", "13/50", "1/10"}, "1/5", {"0", "15/22", "425/1958", "325/4094", "1/46"}},
    {{"9/25", "13/50", "21/100", "17/100"}, "2", {"9/41", "650/2829", "700/2691", "34/117"}},
    {{"13/50", "9/50", "6/25", "8/25"}, "2/5", {"65/139", "2250/11537", "1500/8383", "16/101"}},
};

}  // namespace

TEST_CASE("transformed pmfs match the frozen exact fixtures") {
    for (const auto& fx : kFiniteFixtures) {
        CAPTURE(fx.a);
        FinitePmf d = pmf(fx.base);
        FinitePmf g = tiltkit::tilt_pmf(d, alpha(fx.a));
        CHECK(weight_strings(g) == fx.tilted);
    }
}

TEST_CASE("pmf path equals the closed product form alpha f / (den(k-1) den(k))") {
    for (const auto& fx : kFiniteFixtures) {
        FinitePmf d = pmf(fx.base);
        TiltParameter t = alpha(fx.a);
        FinitePmf g = tiltkit::tilt_pmf(d, t);
        Rational ab = t.alpha_bar();
        for (int k = 1; k <= d.last_index(); ++k) {
            Rational den_prev = Rational(1) - ab * d.survival(k - 1);
            Rational den_cur = Rational(1) - ab * d.survival(k);
            CHECK(g.weight(k) == t.alpha() * d.weight(k) / (den_prev * den_cur));
        }
    }
}

TEST_CASE("survival and cdf transforms are complementary at every index") {
    for (const auto& fx : kFiniteFixtures) {
        FinitePmf d = pmf(fx.base);
        TiltParameter t = alpha(fx.a);
        for (int k = 0; k <= d.last_index(); ++k) {
            CHECK(tiltkit::tilt_survival_at(d, t, k) + tiltkit::tilt_cdf_at(d, t, k) == Rational(1));
        }
        CHECK(tiltkit::tilt_survival_at(d, t, 0) == Rational(1));
        CHECK(tiltkit::tilt_survival_at(d, t, d.last_index()) == Rational(0));
    }
}

TEST_CASE("direct hazard/reversed-hazard/odds transforms equal the materialized pmf's") {
    for (const auto& fx : kFiniteFixtures) {
        FinitePmf d = pmf(fx.base);
        TiltParameter t = alpha(fx.a);
        FinitePmf g = tiltkit::tilt_pmf(d, t);
        for (int k = 1; k <= d.last_index(); ++k) {
            CHECK(tiltkit::tilt_hazard_at(d, t, k) == g.hazard_at(k));
            if (!g.cdf(k).is_zero()) {
                CHECK(tiltkit::tilt_reversed_hazard_at(d, t, k) == g.reversed_hazard_at(k));
                CHECK(tiltkit::tilt_odds_at(d, t, k) == g.odds_at(k));
            }
        }
    }
}

TEST_CASE("transformed odds are the base odds scaled by alpha") {
    FinitePmf d = pmf({"9/25", "13/50", "21/100", "17/100"});
    TiltParameter t = alpha("2");
    for (int k = 1; k <= 3; ++k) {
        CHECK(tiltkit::tilt_odds_at(d, t, k) == Rational(2) * d.odds_at(k));
    }
    CHECK(tiltkit::tilt_odds_at(d, t, 1) == Rational(2) * R("16/9"));
}

TEST_CASE("the first reversed-hazard step stays exactly one under any tilt") {
    FinitePmf d = pmf({"9/25", "13/50", "21/100", "17/100"});
    for (const char* a : {"1/5", "2/5", "1", "2", "5"}) {
        CHECK(tiltkit::tilt_reversed_hazard_at(d, alpha(a), 1) == Rational(1));
    }
}

TEST_CASE("composition multiplies the parameters, identity leaves the pmf alone") {
    for (const auto& fx : kFiniteFixtures) {
        FinitePmf d = pmf(fx.base);
        CHECK(tiltkit::tilt_pmf(d, alpha("1")) == d);
        FinitePmf once = tiltkit::tilt_pmf(tiltkit::tilt_pmf(d, alpha("5")), alpha("2/5"));
        CHECK(once == tiltkit::tilt_pmf(d, alpha("2")));
        FinitePmf back = tiltkit::tilt_pmf(tiltkit::tilt_pmf(d, alpha("5")), alpha("1/5"));
        CHECK(back == d);
    }
}

TEST_CASE("hazard moves down for alpha above one and up below one") {
    FinitePmf d = pmf({"9/25", "13/50", "21/100", "17/100"});
    for (int k = 1; k < d.last_index(); ++k) {  // at k = n both hazards are 1
        CHECK(tiltkit::tilt_hazard_at(d, alpha("5"), k) < d.hazard_at(k));
        CHECK(tiltkit::tilt_hazard_at(d, alpha("1/5"), k) > d.hazard_at(k));
        CHECK(tiltkit::tilt_hazard_at(d, alpha("1"), k) == d.hazard_at(k));
    }
    CHECK(tiltkit::tilt_hazard_at(d, alpha("5"), 4) == Rational(1));
}

TEST_CASE("tilted parametric view matches frozen high-precision survival spots") {
    auto weib = ParametricSurvival::type1_discrete_weibull(0.5, 0.8, 60);
    auto y1 = tiltkit::tilt_curve(weib, alpha("5"));
    CHECK(near(y1.survival(5), 0.3062173988, 1e-9));
    CHECK(near(y1.survival(2) * y1.survival(3), 0.3657684364, 1e-9));

    auto sdist = ParametricSurvival::discrete_s(0.3, 0.6, 60);
    auto y2 = tiltkit::tilt_curve(sdist, alpha("1/5"));
    CHECK(near(y2.survival(5), 0.0757370185, 1e-9));
    CHECK(near(y2.survival(2) * y2.survival(3), 0.0634941628, 1e-9));
}

TEST_CASE("tilted parametric view agrees with the scalar transform at every index") {
    auto par = ParametricSurvival::discrete_pareto(3.0, 2.0, 50);
    auto y = tiltkit::tilt_curve(par, alpha("6"));
    for (int k = 0; k <= 50; ++k) {
        CHECK(y.survival(k) == tiltkit::tilted_survival_value(par.survival(k), 6.0));
    }
    CHECK(y.last_index() == 50);
    CHECK(near(y.pmf(3), y.survival(2) - y.survival(3), 0.0));
    CHECK(near(y.hazard_at(3), y.pmf(3) / y.survival(2), 0.0));
}
