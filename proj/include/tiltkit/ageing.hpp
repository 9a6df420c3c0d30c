#pragma once

#include <array>
#include <cmath>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <type_traits>

#include "tiltkit/errors.hpp"
#include "tiltkit/finite_pmf.hpp"
#include "tiltkit/rational.hpp"
#include "tiltkit/verdict.hpp"

namespace tiltkit {

// The ten ageing notions checked by the toolkit.  Each one is a family of
// inequalities over pmf/survival/cdf values; the checker scans them in index
// order and reports the first failure as the witness.
enum class AgeingProperty { ilr, dlr, ifr, dfr, ifra, dfra, nbu, nwu, drhr, nbafr };

inline constexpr std::array<AgeingProperty, 10> kAllAgeingProperties = {
    AgeingProperty::ilr,  AgeingProperty::dlr,  AgeingProperty::ifr,  AgeingProperty::dfr,
    AgeingProperty::ifra, AgeingProperty::dfra, AgeingProperty::nbu,  AgeingProperty::nwu,
    AgeingProperty::drhr, AgeingProperty::nbafr};

inline const char* ageing_name(AgeingProperty p) {
    switch (p) {
        case AgeingProperty::ilr: return "ilr";
        case AgeingProperty::dlr: return "dlr";
        case AgeingProperty::ifr: return "ifr";
        case AgeingProperty::dfr: return "dfr";
        case AgeingProperty::ifra: return "ifra";
        case AgeingProperty::dfra: return "dfra";
        case AgeingProperty::nbu: return "nbu";
        case AgeingProperty::nwu: return "nwu";
        case AgeingProperty::drhr: return "drhr";
        case AgeingProperty::nbafr: return "nbafr";
    }
    return "?";
}

inline std::optional<AgeingProperty> ageing_from_name(std::string_view name) {
    for (AgeingProperty p : kAllAgeingProperties) {
        if (name == ageing_name(p)) return p;
    }
    return std::nullopt;
}

namespace detail {

// The scan window must sit inside the curve's index range.  A *valid* window
// that leaves a particular property nothing to check (e.g. width-2 window for
// a three-point inequality) yields a vacuous pass, mirroring how a point mass
// satisfies every monotone-hazard notion.
template <class Curve>
Window resolve_window(const Curve& c, const std::optional<Window>& w) {
    int n = c.last_index();
    if (!w) return Window{1, n};
    if (w->lo < 1 || w->hi < w->lo || w->hi > n) {
        throw EmptyWindowError("window {" + std::to_string(w->lo) + ".." + std::to_string(w->hi) +
                               "} is not a subrange of 1.." + std::to_string(n));
    }
    return *w;
}

template <class Curve>
typename Curve::value_type mass(const Curve& c, int k) {
    return c.survival(k - 1) - c.survival(k);
}

template <class Curve>
typename Curve::value_type hazard(const Curve& c, int k) {
    return mass(c, k) / c.survival(k - 1);
}

// Exact path for the fractional-ageing comparisons: compare
// F̄(k)^(1/k) against F̄(k+1)^(1/(k+1)) via the cross powers
// F̄(k)^(k+1) vs F̄(k+1)^k — no roots are ever taken.
inline void averaged_survival_sides(const FinitePmf& c, int k, Rational& lhs, Rational& rhs) {
    lhs = pow(c.survival(k), k + 1);
    rhs = pow(c.survival(k + 1), k);
}

// Floating path: the geometric-average roots themselves are well conditioned
// in [0, 1], so compare (and report) them directly.
template <class Curve>
void averaged_survival_sides(const Curve& c, int k, double& lhs, double& rhs) {
    lhs = std::pow(c.survival(k), 1.0 / k);
    rhs = std::pow(c.survival(k + 1), 1.0 / (k + 1));
}

inline Rational pow_value(const Rational& base, int k) { return tiltkit::pow(base, k); }
inline double pow_value(double base, int k) { return std::pow(base, static_cast<double>(k)); }

}  // namespace detail

// Scan one ageing property over `window` (default: the whole index range).
// The verdict's lhs/rhs are the two sides of the defining inequality at the
// first (lexicographically smallest) failing index.
template <class Curve>
Verdict<typename Curve::value_type> check_ageing(AgeingProperty p, const Curve& c,
                                                 std::optional<Window> window = {}) {
    using V = typename Curve::value_type;
    using P = NumericPolicy<V>;
    using Vd = Verdict<V>;
    const Window w = detail::resolve_window(c, window);

    switch (p) {
        case AgeingProperty::ilr:
        case AgeingProperty::dlr: {
            // log-concave (ilr) / log-convex (dlr) pmf:
            //   f(k+2) f(k) vs f(k+1)^2 for every in-window triple.
            const bool concave = (p == AgeingProperty::ilr);
            for (int k = w.lo; k + 2 <= w.hi; ++k) {
                V lhs = detail::mass(c, k + 2) * detail::mass(c, k);
                V rhs = detail::mass(c, k + 1) * detail::mass(c, k + 1);
                bool ok = concave ? P::leq(lhs, rhs) : P::geq(lhs, rhs);
                if (!ok) return Vd::fail_at(k, lhs, rhs);
            }
            return Vd::pass();
        }
        case AgeingProperty::ifr:
        case AgeingProperty::dfr: {
            const bool increasing = (p == AgeingProperty::ifr);
            for (int k = w.lo; k + 1 <= w.hi; ++k) {
                V lhs = detail::hazard(c, k);
                V rhs = detail::hazard(c, k + 1);
                bool ok = increasing ? P::leq(lhs, rhs) : P::geq(lhs, rhs);
                if (!ok) return Vd::fail_at(k, lhs, rhs);
            }
            return Vd::pass();
        }
        case AgeingProperty::ifra:
        case AgeingProperty::dfra: {
            // Geometric average of survival: F̄(k)^(1/k) monotone.
            const bool decreasing_avg = (p == AgeingProperty::ifra);
            for (int k = w.lo; k + 1 <= w.hi; ++k) {
                V lhs{}, rhs{};
                detail::averaged_survival_sides(c, k, lhs, rhs);
                bool ok = decreasing_avg ? P::geq(lhs, rhs) : P::leq(lhs, rhs);
                if (!ok) return Vd::fail_at(k, lhs, rhs);
            }
            return Vd::pass();
        }
        case AgeingProperty::nbu:
        case AgeingProperty::nwu: {
            // F̄(j + k) vs F̄(j) F̄(k) over pairs j <= k with everything
            // inside the window, scanned in lexicographic (j, k) order.
            const bool new_better = (p == AgeingProperty::nbu);
            for (int j = w.lo; j + j <= w.hi; ++j) {
                for (int k = j; j + k <= w.hi; ++k) {
                    V lhs = c.survival(j + k);
                    V rhs = c.survival(j) * c.survival(k);
                    bool ok = new_better ? P::leq(lhs, rhs) : P::geq(lhs, rhs);
                    if (!ok) return Vd::fail_at_pair(j, k, lhs, rhs);
                }
            }
            return Vd::pass();
        }
        case AgeingProperty::drhr: {
            // Decreasing reversed hazard <=> log-concave cdf:
            //   F(k+1)^2 >= F(k) F(k+2), which also covers indices where the
            //   cdf is still zero (both sides vanish there).
            for (int k = w.lo; k + 2 <= w.hi; ++k) {
                V one{1};
                V lhs = (one - c.survival(k + 1)) * (one - c.survival(k + 1));
                V rhs = (one - c.survival(k)) * (one - c.survival(k + 2));
                if (!P::geq(lhs, rhs)) return Vd::fail_at(k, lhs, rhs);
            }
            return Vd::pass();
        }
        case AgeingProperty::nbafr: {
            // F̄(k) <= F̄(1)^k: the averaged-failure-rate bound anchored at
            // the first step, written without roots.
            for (int k = w.lo; k <= w.hi; ++k) {
                V lhs = c.survival(k);
                V rhs = detail::pow_value(c.survival(1), k);
                if (!P::leq(lhs, rhs)) return Vd::fail_at(k, lhs, rhs);
            }
            return Vd::pass();
        }
    }
    throw Error("unknown ageing property");
}

// All ten verdicts in enum order.  For an exact full-support scan the chain
// ILR => IFR => IFRA => NBU => NBAFR is re-validated as a self-check; these
// implications are theorems for finite supports, so a violation means the
// checkers themselves disagree and the process stops loudly.
template <class Curve>
std::map<AgeingProperty, Verdict<typename Curve::value_type>> classify_all(
    const Curve& c, std::optional<Window> window = {}) {
    std::map<AgeingProperty, Verdict<typename Curve::value_type>> out;
    for (AgeingProperty p : kAllAgeingProperties) {
        out.emplace(p, check_ageing(p, c, window));
    }
    if constexpr (std::is_same_v<typename Curve::value_type, Rational>) {
        if (!window || (window->lo == 1 && window->hi == c.last_index())) {
            const AgeingProperty chain[] = {AgeingProperty::ilr, AgeingProperty::ifr,
                                            AgeingProperty::ifra, AgeingProperty::nbu,
                                            AgeingProperty::nbafr};
            for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
                if (out.at(chain[i]).holds && !out.at(chain[i + 1]).holds) {
                    throw Error(std::string("internal inconsistency: ") + ageing_name(chain[i]) +
                                " holds but " + ageing_name(chain[i + 1]) + " fails");
                }
            }
        }
    }
    return out;
}

}  // namespace tiltkit
