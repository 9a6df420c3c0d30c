#include "tiltkit/lab/claim.hpp"

namespace tiltkit::lab {

const char* regime_name(AlphaRegime r) {
    return r == AlphaRegime::below_one ? "below" : "above";
}

std::optional<AlphaRegime> regime_from_name(std::string_view name) {
    if (name == "below") return AlphaRegime::below_one;
    if (name == "above") return AlphaRegime::above_one;
    return std::nullopt;
}

bool alpha_in_regime(const Rational& alpha, AlphaRegime r) {
    if (r == AlphaRegime::below_one) return Rational(0) < alpha && alpha < Rational(1);
    return alpha > Rational(1);
}

std::vector<Rational> default_alphas(AlphaRegime r) {
    if (r == AlphaRegime::below_one) {
        return {Rational(1, 5), Rational(2, 5), Rational(4, 5)};
    }
    return {Rational(2), Rational(4), Rational(6)};
}

const char* expectation_name(Expectation e) {
    switch (e) {
        case Expectation::preserved: return "preserved";
        case Expectation::not_preserved: return "not-preserved";
        case Expectation::unstated: return "unstated";
    }
    return "?";
}

std::string kind_name(const ClaimKind& kind) {
    if (std::holds_alternative<AgeingProperty>(kind)) {
        return ageing_name(std::get<AgeingProperty>(kind));
    }
    return order_name(std::get<OrderRelation>(kind));
}

std::string PreservationClaim::cell_id() const {
    return kind_name(kind) + ":" + regime_name(regime);
}

namespace {

constexpr Expectation P = Expectation::preserved;
constexpr Expectation N = Expectation::not_preserved;
constexpr Expectation U = Expectation::unstated;

// The catalogued behaviour of each ageing property under the transform:
// {below-one expectation, above-one expectation}.
struct AgeingRow {
    AgeingProperty prop;
    Expectation below;
    Expectation above;
};

constexpr AgeingRow kAgeingRows[] = {
    {AgeingProperty::ilr, N, N},   {AgeingProperty::dlr, N, N},
    {AgeingProperty::ifr, N, P},   {AgeingProperty::dfr, P, N},
    {AgeingProperty::ifra, N, P},  {AgeingProperty::dfra, P, N},
    {AgeingProperty::nbu, N, P},   {AgeingProperty::nwu, P, N},
    {AgeingProperty::drhr, P, N},  {AgeingProperty::nbafr, N, U},
};

struct OrderRow {
    OrderRelation rel;
    Expectation below;
    Expectation above;
};

constexpr OrderRow kOrderRows[] = {
    {OrderRelation::st, P, P},
    {OrderRelation::hr, N, P},
    {OrderRelation::rhr, P, N},
    {OrderRelation::lr, N, N},
};

std::vector<PreservationClaim> build_ageing() {
    std::vector<PreservationClaim> out;
    for (const auto& row : kAgeingRows) {
        out.push_back({row.prop, AlphaRegime::below_one, row.below});
        out.push_back({row.prop, AlphaRegime::above_one, row.above});
    }
    return out;
}

std::vector<PreservationClaim> build_orders() {
    std::vector<PreservationClaim> out;
    for (const auto& row : kOrderRows) {
        out.push_back({row.rel, AlphaRegime::below_one, row.below});
        out.push_back({row.rel, AlphaRegime::above_one, row.above});
    }
    return out;
}

}  // namespace

const std::vector<PreservationClaim>& ageing_claims() {
    static const std::vector<PreservationClaim> claims = build_ageing();
    return claims;
}

const std::vector<PreservationClaim>& order_claims() {
    static const std::vector<PreservationClaim> claims = build_orders();
    return claims;
}

const std::vector<PreservationClaim>& all_claims() {
    static const std::vector<PreservationClaim> claims = [] {
        std::vector<PreservationClaim> out = ageing_claims();
        const auto& orders = order_claims();
        out.insert(out.end(), orders.begin(), orders.end());
        return out;
    }();
    return claims;
}

std::optional<PreservationClaim> claim_from_cell_id(std::string_view id) {
    for (const auto& claim : all_claims()) {
        if (claim.cell_id() == id) return claim;
    }
    return std::nullopt;
}

}  // namespace tiltkit::lab
