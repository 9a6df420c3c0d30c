#pragma once

#include <cmath>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "tiltkit/errors.hpp"
#include "tiltkit/tilt.hpp"
#include "tiltkit/verdict.hpp"

namespace tiltkit::lab {

namespace detail {

template <typename V>
V alpha_as(const TiltParameter& t) {
    if constexpr (std::is_same_v<V, Rational>) {
        return t.alpha();
    } else {
        return t.alpha_double();
    }
}

template <typename V>
V distance_from_one(const V& x) {
    if constexpr (std::is_same_v<V, Rational>) {
        return abs(x - Rational(1));
    } else {
        return std::fabs(x - 1.0);
    }
}

}  // namespace detail

// The pointwise ratio between the tilted and the baseline hazard,
// r_Y(k) / r_X(k) = 1 / (1 - (1-alpha) * S_X(k)), evaluated on a window,
// with its monotonicity verdict and how close the window's end sits to the
// ratio's limit of 1.
template <typename Curve>
struct RatioProfile {
    using value_type = typename Curve::value_type;
    std::vector<std::pair<int, value_type>> points;
    Verdict<value_type> monotonicity;  // nondecreasing above 1, nonincreasing below, constant at 1
    value_type end_distance;  // |ratio(hi) - 1|
    value_type end_bound;     // 1 - (1-alpha) * S_X(hi); reported alongside, never asserted
};

template <typename Curve>
RatioProfile<Curve> hazard_ratio_profile(const Curve& base, const TiltParameter& t,
                                         std::optional<Window> window = std::nullopt) {
    using V = typename Curve::value_type;
    const int last = base.last_index();
    const Window w = window.value_or(Window{1, last});
    if (w.lo < 1 || w.hi < w.lo || w.hi > last) {
        throw EmptyWindowError("ratio window " + std::to_string(w.lo) + ".." + std::to_string(w.hi) +
                               " is not a subrange of 1.." + std::to_string(last));
    }

    const V abar = V(1) - detail::alpha_as<V>(t);
    RatioProfile<Curve> out;
    out.points.reserve(static_cast<std::size_t>(w.hi - w.lo + 1));
    for (int k = w.lo; k <= w.hi; ++k) {
        V ratio = V(1) / (V(1) - abar * base.survival(k));
        out.points.emplace_back(k, ratio);
    }

    NumericPolicy<V> policy;
    out.monotonicity = Verdict<V>::pass();
    for (std::size_t i = 0; i + 1 < out.points.size(); ++i) {
        const V& a = out.points[i].second;
        const V& b = out.points[i + 1].second;
        bool ok = t.raises() ? policy.leq(a, b)
                             : (t.lowers() ? policy.geq(a, b) : policy.leq(a, b) && policy.geq(a, b));
        if (!ok) {
            out.monotonicity = Verdict<V>::fail_at(out.points[i].first, a, b);
            break;
        }
    }

    out.end_distance = detail::distance_from_one(out.points.back().second);
    out.end_bound = V(1) - abar * base.survival(w.hi);
    return out;
}

}  // namespace tiltkit::lab
