#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tiltkit/ageing.hpp"
#include "tiltkit/orders.hpp"
#include "tiltkit/rational.hpp"

namespace tiltkit::lab {

// Which side of 1 the transform parameter lives on.  alpha = 1 is the
// identity and belongs to neither regime.
enum class AlphaRegime { below_one, above_one };

const char* regime_name(AlphaRegime r);
std::optional<AlphaRegime> regime_from_name(std::string_view name);
bool alpha_in_regime(const Rational& alpha, AlphaRegime r);

// Default transform parameters tried per regime, in order.
std::vector<Rational> default_alphas(AlphaRegime r);

// What the catalogued preservation table expects for a cell: the property is
// kept by every transform in the regime, it is not (a counterexample exists),
// or the cell is left open.
enum class Expectation { preserved, not_preserved, unstated };

const char* expectation_name(Expectation e);

using ClaimKind = std::variant<AgeingProperty, OrderRelation>;

std::string kind_name(const ClaimKind& kind);

// One cell of the preservation tables: a property (or order), a parameter
// regime, and the catalogued expectation for that combination.
struct PreservationClaim {
    ClaimKind kind;
    AlphaRegime regime;
    Expectation expected;

    bool is_order() const { return std::holds_alternative<OrderRelation>(kind); }

    // "ifr:below", "lr:above", ...
    std::string cell_id() const;

    friend bool operator==(const PreservationClaim& a, const PreservationClaim& b) {
        return a.kind == b.kind && a.regime == b.regime && a.expected == b.expected;
    }
};

// The twenty ageing cells (ten properties x two regimes), in property order.
const std::vector<PreservationClaim>& ageing_claims();

// The eight order cells (four relations x two regimes), in relation order.
const std::vector<PreservationClaim>& order_claims();

// All twenty-eight cells: ageing first, then orders.
const std::vector<PreservationClaim>& all_claims();

// Looks a cell up by its id, e.g. "dfr:above".
std::optional<PreservationClaim> claim_from_cell_id(std::string_view id);

}  // namespace tiltkit::lab
