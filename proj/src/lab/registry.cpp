#include "tiltkit/lab/registry.hpp"

#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <utility>

#include "tiltkit/ageing.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/orders.hpp"

namespace tiltkit::lab {

namespace {

FinitePmf fp(std::initializer_list<const char*> ws) {
    return FinitePmf::from_strings(std::vector<std::string>(ws.begin(), ws.end()));
}

PreservationClaim cell(const char* id) {
    auto c = claim_from_cell_id(id);
    if (!c) throw Error(std::string("unknown catalogue cell ") + id);
    return *c;
}

TiltParameter tp(const char* s) { return TiltParameter::parse(s); }

PinnedVerdict holds_before(ClaimKind kind) { return {kind, true, true, 0, 0, "", ""}; }

PinnedVerdict holds_after(ClaimKind kind) { return {kind, false, true, 0, 0, "", ""}; }

PinnedVerdict fails_after(ClaimKind kind, int k, const char* lhs, const char* rhs) {
    return {kind, false, false, 0, k, lhs, rhs};
}

PinnedVerdict fails_after_pair(ClaimKind kind, int j, int k, const char* lhs, const char* rhs) {
    return {kind, false, false, j, k, lhs, rhs};
}

std::vector<std::string> strs(std::initializer_list<const char*> vs) {
    return std::vector<std::string>(vs.begin(), vs.end());
}

std::vector<ReferenceCase> build_cases() {
    using AP = AgeingProperty;
    using OR = OrderRelation;
    std::vector<ReferenceCase> cases;

    cases.push_back(ReferenceCase{
        "ilr-alpha5",
        "log-concave five-point mass list, up-tilt: log-concavity and log-convexity both fail",
        cell("ilr:above"),
        {fp({"0", "1/10", "1/4", "7/20", "3/10"})},
        std::nullopt,
        tp("5"),
        {holds_before(AP::ilr), fails_after(AP::ilr, 3, "625/12144", "30625/627264"),
         fails_after(AP::dlr, 1, "0", "1/2116")},
        {{SequenceKind::pmf_weights, 0, strs({"0", "1/46", "125/1656", "175/792", "15/22"})}},
        {}});

    cases.push_back(ReferenceCase{
        "ilr-alpha02",
        "log-concave five-point mass list, down-tilt: log-concavity and log-convexity both fail",
        cell("ilr:below"),
        {fp({"0", "3/10", "17/50", "13/50", "1/10"})},
        std::nullopt,
        tp("1/5"),
        {holds_before(AP::ilr), fails_after(AP::ilr, 2, "4875/90068", "180625/3833764"),
         fails_after(AP::dlr, 1, "0", "225/484")},
        {{SequenceKind::pmf_weights, 0, strs({"0", "15/22", "425/1958", "325/4094", "1/46"})}},
        {}});

    cases.push_back(ReferenceCase{
        "dlr-alpha2",
        "log-convex four-point mass list, up-tilt: log-convexity and log-concavity both fail",
        cell("dlr:above"),
        {fp({"9/25", "13/50", "21/100", "17/100"})},
        std::nullopt,
        tp("2"),
        {holds_before(AP::dlr), fails_after(AP::dlr, 2, "1700/25461", "490000/7241481"),
         fails_after(AP::ilr, 1, "700/12259", "422500/8003241")},
        {{SequenceKind::pmf_weights, 0, strs({"9/41", "650/2829", "700/2691", "34/117"})}},
        {}});

    cases.push_back(ReferenceCase{
        "dlr-alpha04",
        "log-convex four-point mass list, down-tilt: log-convexity and log-concavity both fail",
        cell("dlr:below"),
        {fp({"13/50", "9/50", "6/25", "8/25"})},
        std::nullopt,
        tp("2/5"),
        {holds_before(AP::dlr), fails_after(AP::dlr, 2, "36000/1165237", "2250000/70274689"),
         fails_after(AP::ilr, 1, "97500/1165237", "5062500/133102369")},
        {{SequenceKind::pmf_weights, 0, strs({"65/139", "2250/11537", "1500/8383", "16/101"})}},
        {}});

    cases.push_back(ReferenceCase{
        "ifr-salvia-alpha02",
        "factorial-tail curve (c=0.8), down-tilt: hazard turns non-monotone on the window",
        cell("ifr:below"),
        {ParametricSurvival::salvia_bollinger(0.8, 30)},
        Window{2, 4},
        tp("1/5"),
        {holds_before(AP::ifr), fails_after(AP::ifr, 2, "0.8064516", "0.7870635"),
         fails_after(AP::dfr, 3, "0.7870635", "0.8110739")},
        {},
        {{PinQuantity::tilted_hazard, 0, 2, "0.8064516"},
         {PinQuantity::tilted_hazard, 0, 3, "0.7870635"},
         {PinQuantity::tilted_hazard, 0, 4, "0.8110739"}}});

    cases.push_back(ReferenceCase{
        "dfr-weibull-alpha5",
        "fractional-power curve (q=0.5, beta=0.8), up-tilt: hazard turns non-monotone on the window",
        cell("dfr:above"),
        {ParametricSurvival::type1_discrete_weibull(0.5, 0.8, 60)},
        Window{7, 13},
        tp("5"),
        {holds_before(AP::dfr), fails_after(AP::dfr, 7, "0.2759209", "0.2807789"),
         fails_after(AP::ifr, 10, "0.2834942", "0.2827651")},
        {},
        {{PinQuantity::tilted_hazard, 0, 7, "0.2759209"},
         {PinQuantity::tilted_hazard, 0, 10, "0.2834942"},
         {PinQuantity::tilted_hazard, 0, 13, "0.2793229"}}});

    cases.push_back(ReferenceCase{
        "nbu-sdist-alpha02",
        "damped-product curve (p=0.3, a=0.6), down-tilt: used-versus-new inequality flips",
        cell("nbu:below"),
        {ParametricSurvival::discrete_s(0.3, 0.6, 60)},
        std::nullopt,
        tp("1/5"),
        {holds_before(AP::nbu), fails_after_pair(AP::nbu, 1, 3, "0.1184296", "0.1144662")},
        {},
        {{PinQuantity::tilted_survival, 0, 5, "0.075737"},
         {PinQuantity::tilted_survival_product, 2, 3, "0.063494"}}});

    cases.push_back(ReferenceCase{
        "nwu-weibull-alpha5",
        "fractional-power curve (q=0.5, beta=0.8), up-tilt: used-versus-new inequality flips",
        cell("nwu:above"),
        {ParametricSurvival::type1_discrete_weibull(0.5, 0.8, 60)},
        std::nullopt,
        tp("5"),
        {holds_before(AP::nwu), fails_after_pair(AP::nwu, 1, 1, "0.6809297", "0.6944444")},
        {},
        {{PinQuantity::tilted_survival, 0, 5, "0.3062174"},
         {PinQuantity::tilted_survival_product, 2, 3, "0.3657684"}}});

    cases.push_back(ReferenceCase{
        "ifra-sdist-alpha02",
        "damped-product curve (p=0.5, a=0.6), down-tilt: geometric-average survival turns non-monotone",
        cell("ifra:below"),
        {ParametricSurvival::discrete_s(0.5, 0.6, 60)},
        std::nullopt,
        tp("1/5"),
        {holds_before(AP::ifra), fails_after(AP::ifra, 2, "0.4389015", "0.4480604"),
         fails_after(AP::dfra, 1, "0.4444444", "0.4389015")},
        {},
        {{PinQuantity::tilted_root, 0, 1, "0.44444"},
         {PinQuantity::tilted_root, 0, 2, "0.438901"},
         {PinQuantity::tilted_root, 0, 4, "0.457806"}}});

    cases.push_back(ReferenceCase{
        "dfra-pareto-alpha6",
        "polynomial-tail curve (c=3, d=2), up-tilt: geometric-average survival turns non-monotone",
        cell("dfra:above"),
        {ParametricSurvival::discrete_pareto(3.0, 2.0, 60)},
        std::nullopt,
        tp("6"),
        {holds_before(AP::dfra), fails_after(AP::dfra, 1, "0.7164179", "0.679366"),
         fails_after(AP::ifra, 4, "0.658037", "0.660098")},
        {},
        {{PinQuantity::tilted_root, 0, 1, "0.7164179"},
         {PinQuantity::tilted_root, 0, 4, "0.658037"},
         {PinQuantity::tilted_root, 0, 8, "0.68081"}}});

    cases.push_back(ReferenceCase{
        "drhr-alpha4",
        "log-concave cdf, up-tilt: log-concavity of the cdf fails",
        cell("drhr:above"),
        {fp({"0", "4/25", "6/25", "4/15", "1/3"})},
        std::nullopt,
        tp("4"),
        {holds_before(AP::drhr), fails_after(AP::drhr, 3, "1/9", "1/7")},
        {{SequenceKind::cdf_values, 0, strs({"0", "1/22", "1/7", "1/3", "1"})}},
        {}});

    cases.push_back(ReferenceCase{
        "nbafr-alpha04",
        "first-step survival envelope, down-tilt: the geometric envelope bound fails",
        cell("nbafr:below"),
        {fp({"1/5", "12/65", "3/26", "1/2"})},
        std::nullopt,
        tp("2/5"),
        {holds_before(AP::nbafr), fails_after(AP::nbafr, 2, "16/41", "64/169")},
        {{SequenceKind::survival_values, 0, strs({"8/13", "16/41", "2/7", "0"})}},
        {}});

    cases.push_back(ReferenceCase{
        "hr-alpha02",
        "hazard-ordered pair, down-tilt: the catalogued pair keeps the order after the transform "
        "(the refuting pair for this cell comes from the enumeration phase of the search)",
        cell("hr:below"),
        {fp({"0", "1/2", "1/10", "2/5"}), fp({"0", "3/8", "3/40", "11/20"})},
        std::nullopt,
        tp("1/5"),
        {holds_before(OR::hr), holds_after(OR::hr)},
        {{SequenceKind::survival_values, 0, strs({"1", "1/6", "2/17", "0"})},
         {SequenceKind::survival_values, 1, strs({"1", "1/4", "11/56", "0"})}},
        {}});

    cases.push_back(ReferenceCase{
        "rhr-alpha4",
        "reversed-hazard-ordered pair, up-tilt: the order fails after the transform",
        cell("rhr:above"),
        {fp({"0", "5/24", "7/24", "1/4", "1/4"}), fp({"0", "1/6", "1/4", "1/4", "1/3"})},
        std::nullopt,
        tp("4"),
        {holds_before(OR::rhr), fails_after(OR::rhr, 3, "56/81", "24/35")},
        {{SequenceKind::cdf_values, 0, strs({"0", "5/81", "1/5", "3/7", "1"})},
         {SequenceKind::cdf_values, 1, strs({"0", "1/21", "5/33", "1/3", "1"})}},
        {}});

    cases.push_back(ReferenceCase{
        "lr-alpha5",
        "likelihood-ratio-ordered pair, up-tilt: the order fails after the transform",
        cell("lr:above"),
        {fp({"0", "3/10", "2/5", "1/5", "1/10"}), fp({"0", "1/5", "3/10", "1/5", "3/10"})},
        std::nullopt,
        tp("5"),
        {holds_before(OR::lr), fails_after_pair(OR::lr, 2, 3, "50/4389", "5/532")},
        {{SequenceKind::pmf_weights, 0, strs({"0", "3/38", "50/209", "25/77", "5/14"})},
         {SequenceKind::pmf_weights, 1, strs({"0", "1/21", "5/42", "5/33", "15/22"})}},
        {}});

    cases.push_back(ReferenceCase{
        "lr-alpha02",
        "likelihood-ratio-ordered pair, down-tilt: the order fails after the transform",
        cell("lr:below"),
        {fp({"0", "3/10", "3/10", "1/5", "1/5"}), fp({"0", "1/5", "3/10", "6/25", "13/50"})},
        std::nullopt,
        tp("1/5"),
        {holds_before(OR::lr), fails_after_pair(OR::lr, 3, 5, "5/378", "325/24684")},
        {{SequenceKind::pmf_weights, 0, strs({"0", "15/22", "75/374", "25/357", "1/21"})},
         {SequenceKind::pmf_weights, 1, strs({"0", "5/9", "5/18", "10/99", "13/198"})}},
        {}});

    return cases;
}

std::string verdict_site(const PinnedVerdict& pin) {
    return kind_name(pin.check) + (pin.on_baseline ? " before the transform" : " after the transform");
}

void compare_exact(const PinnedVerdict& pin, const Verdict<Rational>& got, CaseOutcome& out) {
    auto note = [&](std::string m) {
        out.pass = false;
        out.mismatches.push_back(verdict_site(pin) + ": " + std::move(m));
    };
    if (got.holds != pin.expect_holds) {
        note(std::string("pinned ") + (pin.expect_holds ? "holds" : "a failure") + ", recomputed " +
             describe(got));
        return;
    }
    if (pin.expect_holds) return;
    if (got.j != pin.j || got.k != pin.k) {
        note("pinned witness (" + std::to_string(pin.j) + "," + std::to_string(pin.k) +
             "), recomputed " + describe(got));
        return;
    }
    if (got.lhs != Rational::parse(pin.lhs) || got.rhs != Rational::parse(pin.rhs)) {
        note("pinned witness values (" + pin.lhs + ", " + pin.rhs + "), recomputed " + describe(got));
    }
}

void compare_approx(const PinnedVerdict& pin, const Verdict<double>& got, CaseOutcome& out) {
    auto note = [&](std::string m) {
        out.pass = false;
        out.mismatches.push_back(verdict_site(pin) + ": " + std::move(m));
    };
    if (got.holds != pin.expect_holds) {
        note(std::string("pinned ") + (pin.expect_holds ? "holds" : "a failure") + ", recomputed " +
             describe(got));
        return;
    }
    if (pin.expect_holds) return;
    if (got.j != pin.j || got.k != pin.k) {
        note("pinned witness (" + std::to_string(pin.j) + "," + std::to_string(pin.k) +
             "), recomputed " + describe(got));
        return;
    }
    double lhs = std::strtod(pin.lhs.c_str(), nullptr);
    double rhs = std::strtod(pin.rhs.c_str(), nullptr);
    if (std::fabs(got.lhs - lhs) > decimal_pin_tolerance(pin.lhs) ||
        std::fabs(got.rhs - rhs) > decimal_pin_tolerance(pin.rhs)) {
        note("pinned witness values (" + pin.lhs + ", " + pin.rhs + "), recomputed " + describe(got));
    }
}

void compare_sequence(const PinnedSequence& seq, const FinitePmf& tilted, CaseOutcome& out) {
    const char* what = seq.kind == SequenceKind::pmf_weights
                           ? "mass"
                           : (seq.kind == SequenceKind::cdf_values ? "cdf" : "survival");
    for (int k = 1; k <= static_cast<int>(seq.values.size()); ++k) {
        Rational got = seq.kind == SequenceKind::pmf_weights
                           ? tilted.weight(k)
                           : (seq.kind == SequenceKind::cdf_values ? tilted.cdf(k) : tilted.survival(k));
        const std::string& want = seq.values[static_cast<std::size_t>(k - 1)];
        if (got != Rational::parse(want)) {
            out.pass = false;
            out.mismatches.push_back("tilted " + std::string(what) + " at k=" + std::to_string(k) +
                                     ": pinned " + want + ", recomputed " + got.str());
        }
    }
}

double computed_pin(const TiltedSurvival& y, const DecimalPin& pin) {
    switch (pin.quantity) {
        case PinQuantity::tilted_hazard: return y.hazard_at(pin.k);
        case PinQuantity::tilted_survival: return y.survival(pin.k);
        case PinQuantity::tilted_survival_product: return y.survival(pin.j) * y.survival(pin.k);
        case PinQuantity::tilted_root: return std::pow(y.survival(pin.k), 1.0 / pin.k);
    }
    throw Error("unknown pin quantity");
}

}  // namespace

std::string decimal_pin_label(const DecimalPin& pin) {
    std::string k = std::to_string(pin.k);
    switch (pin.quantity) {
        case PinQuantity::tilted_hazard: return "r_Y(" + k + ")";
        case PinQuantity::tilted_survival: return "S_Y(" + k + ")";
        case PinQuantity::tilted_survival_product:
            return "S_Y(" + std::to_string(pin.j) + ")*S_Y(" + k + ")";
        case PinQuantity::tilted_root: return "S_Y(" + k + ")^(1/" + k + ")";
    }
    throw Error("unknown pin quantity");
}

double decimal_pin_tolerance(const std::string& printed) {
    auto dot = printed.find('.');
    int digits = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
    double ulp = std::pow(10.0, -digits);
    return ulp > 5e-7 ? ulp : 5e-7;
}

const std::vector<ReferenceCase>& reference_cases() {
    static const std::vector<ReferenceCase> cases = build_cases();
    return cases;
}

const ReferenceCase* find_reference_case(std::string_view id) {
    for (const auto& c : reference_cases()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

CaseOutcome reproduce_case(const ReferenceCase& c) {
    CaseOutcome out{c.id, true, {}};
    try {
        if (c.claim.is_order()) {
            const auto& a = std::get<FinitePmf>(c.baselines.at(0));
            const auto& b = std::get<FinitePmf>(c.baselines.at(1));
            FinitePmf ta = tilt_pmf(a, c.alpha);
            FinitePmf tb = tilt_pmf(b, c.alpha);
            for (const auto& pin : c.verdicts) {
                auto rel = std::get<OrderRelation>(pin.check);
                compare_exact(pin, pin.on_baseline ? check_order(rel, a, b) : check_order(rel, ta, tb),
                              out);
            }
            for (const auto& seq : c.sequences) compare_sequence(seq, seq.baseline == 0 ? ta : tb, out);
        } else if (const auto* x = std::get_if<FinitePmf>(&c.baselines.at(0))) {
            FinitePmf y = tilt_pmf(*x, c.alpha);
            for (const auto& pin : c.verdicts) {
                auto prop = std::get<AgeingProperty>(pin.check);
                compare_exact(pin, check_ageing(prop, pin.on_baseline ? *x : y, c.window), out);
            }
            for (const auto& seq : c.sequences) compare_sequence(seq, y, out);
        } else {
            const auto& curve = std::get<ParametricSurvival>(c.baselines.at(0));
            TiltedSurvival y = tilt_curve(curve, c.alpha);
            for (const auto& pin : c.verdicts) {
                auto prop = std::get<AgeingProperty>(pin.check);
                if (pin.on_baseline) {
                    compare_approx(pin, check_ageing(prop, curve, c.window), out);
                } else {
                    compare_approx(pin, check_ageing(prop, y, c.window), out);
                }
            }
            for (const auto& pin : c.pins) {
                double got = computed_pin(y, pin);
                double want = std::strtod(pin.printed.c_str(), nullptr);
                if (std::fabs(got - want) > decimal_pin_tolerance(pin.printed)) {
                    out.pass = false;
                    out.mismatches.push_back(decimal_pin_label(pin) + ": pinned " + pin.printed +
                                             ", recomputed " + format_value(got));
                }
            }
        }
    } catch (const Error& e) {
        out.pass = false;
        out.mismatches.push_back(std::string("evaluation error: ") + e.what());
    }
    return out;
}

std::vector<CaseOutcome> reproduce_all_cases() {
    std::vector<CaseOutcome> out;
    for (const auto& c : reference_cases()) out.push_back(reproduce_case(c));
    return out;
}

std::vector<PinCheckResult> check_decimal_pins() {
    std::vector<PinCheckResult> out;
    for (const auto& c : reference_cases()) {
        if (c.pins.empty()) continue;
        const auto& x = std::get<ParametricSurvival>(c.baselines.at(0));
        TiltedSurvival y = tilt_curve(x, c.alpha);
        for (const auto& pin : c.pins) {
            PinCheckResult r;
            r.case_id = c.id;
            r.label = decimal_pin_label(pin);
            r.printed = pin.printed;
            r.computed = computed_pin(y, pin);
            r.tolerance = decimal_pin_tolerance(pin.printed);
            r.pass = std::fabs(r.computed - std::strtod(pin.printed.c_str(), nullptr)) <= r.tolerance;
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace tiltkit::lab
