#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltkit/interchange.hpp"
#include "tiltkit/lab/claim.hpp"
#include "tiltkit/tilt.hpp"
#include "tiltkit/verdict.hpp"

namespace tiltkit::lab {

// One scan pinned to its expected verdict.  Exact instances pin the witness
// sides as canonical fractions; floating instances pin them as printed
// decimals compared under decimal_pin_tolerance.
struct PinnedVerdict {
    ClaimKind check;
    bool on_baseline = false;  // checked before the transform instead of after
    bool expect_holds = false;
    int j = 0;
    int k = 0;
    std::string lhs;  // empty when expect_holds
    std::string rhs;
};

// A full tilted sequence pinned value-for-value (exact cases only).
enum class SequenceKind { pmf_weights, cdf_values, survival_values };

struct PinnedSequence {
    SequenceKind kind;
    std::size_t baseline = 0;  // which baseline's tilt is pinned
    std::vector<std::string> values;  // entries for k = 1..n
};

// A single decimal spot value of the tilted curve, pinned exactly as the
// source table prints it.
enum class PinQuantity { tilted_hazard, tilted_survival, tilted_survival_product, tilted_root };

struct DecimalPin {
    PinQuantity quantity;
    int j = 0;  // first index for products, unused otherwise
    int k = 0;
    std::string printed;
};

std::string decimal_pin_label(const DecimalPin& pin);

// Tolerance for a printed decimal: 5e-7 (the tables print at most seven
// significant digits), widened to one unit in the last printed place when
// the table rounded more coarsely than that.
double decimal_pin_tolerance(const std::string& printed);

// One catalogued reference instance: the baseline distribution(s), the
// transform parameter, and every value and verdict pinned for it.
struct ReferenceCase {
    std::string id;
    std::string note;
    PreservationClaim claim;
    std::vector<DistributionSpec> baselines;
    std::optional<Window> window;
    TiltParameter alpha;
    std::vector<PinnedVerdict> verdicts;
    std::vector<PinnedSequence> sequences;
    std::vector<DecimalPin> pins;
};

// The sixteen catalogued cases, in catalogue order.
const std::vector<ReferenceCase>& reference_cases();

const ReferenceCase* find_reference_case(std::string_view id);

struct CaseOutcome {
    std::string id;
    bool pass = true;
    std::vector<std::string> mismatches;  // one line per divergence
};

// Recomputes everything the case pins — verdicts before and after the
// transform, tilted sequences, decimal spot values — and reports any
// divergence from the pinned records.
CaseOutcome reproduce_case(const ReferenceCase& c);

std::vector<CaseOutcome> reproduce_all_cases();

struct PinCheckResult {
    std::string case_id;
    std::string label;
    std::string printed;
    double computed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Every decimal pin in the catalogue, recomputed and compared.
std::vector<PinCheckResult> check_decimal_pins();

}  // namespace tiltkit::lab
