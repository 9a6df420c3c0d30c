#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>

#include "tiltkit/finite_pmf.hpp"
#include "tiltkit/rational.hpp"
#include "tiltkit/verdict.hpp"

namespace tiltkit {

// Stochastic orderings between two finite exact pmfs.  check_order(rel, a, b)
// decides "a <= b in the `rel` sense"; a failed verdict carries the first
// index (or index pair) where the defining inequality breaks.
enum class OrderRelation { st, hr, rhr, lr };

inline constexpr std::array<OrderRelation, 4> kAllOrderRelations = {
    OrderRelation::st, OrderRelation::hr, OrderRelation::rhr, OrderRelation::lr};

inline const char* order_name(OrderRelation r) {
    switch (r) {
        case OrderRelation::st: return "st";
        case OrderRelation::hr: return "hr";
        case OrderRelation::rhr: return "rhr";
        case OrderRelation::lr: return "lr";
    }
    return "?";
}

inline std::optional<OrderRelation> order_from_name(std::string_view name) {
    for (OrderRelation r : kAllOrderRelations) {
        if (name == order_name(r)) return r;
    }
    return std::nullopt;
}

namespace detail {

// Reversed hazard extended beyond the support: f(k) = 0 and F(k) = 1 there,
// so the extension is 0.  Only valid where F(k) > 0.
inline Rational extended_reversed_hazard(const FinitePmf& d, int k) {
    if (k > d.last_index()) return Rational(0);
    return d.reversed_hazard_at(k);
}

}  // namespace detail

// Usual stochastic order: F̄_a(k) <= F̄_b(k) everywhere.
inline Verdict<Rational> check_order_st(const FinitePmf& a, const FinitePmf& b) {
    int hi = std::max(a.last_index(), b.last_index());
    for (int k = 1; k <= hi; ++k) {
        const Rational& lhs = a.survival(k);
        const Rational& rhs = b.survival(k);
        if (!(lhs <= rhs)) return Verdict<Rational>::fail_at(k, lhs, rhs);
    }
    return Verdict<Rational>::pass();
}

// Hazard rate order, hazard form: r_a(k) >= r_b(k) wherever both hazards are
// defined.  The top of a shorter a-support is caught automatically: if b ends
// first, r_b hits 1 while r_a is still below 1 at that index.
inline Verdict<Rational> check_order_hr(const FinitePmf& a, const FinitePmf& b) {
    int hi = std::min(a.last_index(), b.last_index());
    for (int k = 1; k <= hi; ++k) {
        Rational lhs = a.hazard_at(k);
        Rational rhs = b.hazard_at(k);
        if (!(lhs >= rhs)) return Verdict<Rational>::fail_at(k, lhs, rhs);
    }
    return Verdict<Rational>::pass();
}

// Hazard rate order, survival-ratio form: F̄_b / F̄_a nondecreasing, written
// division-free as F̄_b(k) F̄_a(k-1) >= F̄_b(k-1) F̄_a(k) for every k.  Must
// agree with check_order_hr on every pair; both are exposed so tests can
// cross-validate them against each other.
inline Verdict<Rational> check_order_hr_by_ratio(const FinitePmf& a, const FinitePmf& b) {
    int hi = std::max(a.last_index(), b.last_index());
    for (int k = 1; k <= hi; ++k) {
        Rational lhs = b.survival(k) * a.survival(k - 1);
        Rational rhs = b.survival(k - 1) * a.survival(k);
        if (!(lhs >= rhs)) return Verdict<Rational>::fail_at(k, lhs, rhs);
    }
    return Verdict<Rational>::pass();
}

// Reversed hazard rate order, reversed-hazard form: r̃_a(k) <= r̃_b(k) from
// the first index where both cdfs are positive up to the last support point.
// A pair whose a-support starts strictly later than b's fails right at that
// start (r̃_a = 1 there while r̃_b < 1), so no side condition is needed.
inline Verdict<Rational> check_order_rhr(const FinitePmf& a, const FinitePmf& b) {
    int lo = std::max(a.first_positive_index(), b.first_positive_index());
    int hi = std::max(a.last_index(), b.last_index());
    for (int k = lo; k <= hi; ++k) {
        Rational lhs = detail::extended_reversed_hazard(a, k);
        Rational rhs = detail::extended_reversed_hazard(b, k);
        if (!(lhs <= rhs)) return Verdict<Rational>::fail_at(k, lhs, rhs);
    }
    return Verdict<Rational>::pass();
}

// Reversed hazard rate order, cdf-ratio form: F_a / F_b nonincreasing where
// defined, division-free as F_b(k-1) F_a(k) <= F_a(k-1) F_b(k) for every k.
// Must agree with check_order_rhr on every pair.
inline Verdict<Rational> check_order_rhr_by_ratio(const FinitePmf& a, const FinitePmf& b) {
    int hi = std::max(a.last_index(), b.last_index());
    for (int k = 2; k <= hi; ++k) {
        Rational lhs = (Rational(1) - b.survival(k - 1)) * (Rational(1) - a.survival(k));
        Rational rhs = (Rational(1) - a.survival(k - 1)) * (Rational(1) - b.survival(k));
        if (!(lhs <= rhs)) return Verdict<Rational>::fail_at(k, lhs, rhs);
    }
    return Verdict<Rational>::pass();
}

// Likelihood ratio order: f_b / f_a nondecreasing across the union of
// supports, division-free as f_a(k) f_b(j) <= f_a(j) f_b(k) for all j < k.
inline Verdict<Rational> check_order_lr(const FinitePmf& a, const FinitePmf& b) {
    int hi = std::max(a.last_index(), b.last_index());
    for (int j = 1; j < hi; ++j) {
        for (int k = j + 1; k <= hi; ++k) {
            Rational lhs = a.weight(k) * b.weight(j);
            Rational rhs = a.weight(j) * b.weight(k);
            if (!(lhs <= rhs)) return Verdict<Rational>::fail_at_pair(j, k, lhs, rhs);
        }
    }
    return Verdict<Rational>::pass();
}

inline Verdict<Rational> check_order(OrderRelation rel, const FinitePmf& a, const FinitePmf& b) {
    switch (rel) {
        case OrderRelation::st: return check_order_st(a, b);
        case OrderRelation::hr: return check_order_hr(a, b);
        case OrderRelation::rhr: return check_order_rhr(a, b);
        case OrderRelation::lr: return check_order_lr(a, b);
    }
    throw Error("unknown order relation");
}

}  // namespace tiltkit
