#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "tiltkit/errors.hpp"
#include "tiltkit/rational.hpp"

namespace tiltkit {

// Inclusive index range a predicate is scanned over.  Validation against a
// specific curve happens where the predicate knows how many indices it
// consumes per step (see ageing.hpp).
struct Window {
    int lo = 1;
    int hi = 1;

    friend bool operator==(const Window& a, const Window& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Comparison policy per scalar type.  Exact values compare exactly; doubles
// get a small relative slack so that ties of the defining inequalities are
// never turned into spurious witnesses by the last bit of rounding.
template <class V>
struct NumericPolicy;

template <>
struct NumericPolicy<Rational> {
    static bool leq(const Rational& a, const Rational& b) { return a <= b; }
    static bool geq(const Rational& a, const Rational& b) { return a >= b; }
};

template <>
struct NumericPolicy<double> {
    static constexpr double kSlackScale = 1e-12;
    static double slack(double a, double b) {
        return kSlackScale * std::max({1.0, std::fabs(a), std::fabs(b)});
    }
    static bool leq(double a, double b) { return a <= b + slack(a, b); }
    static bool geq(double a, double b) { return a >= b - slack(a, b); }
};

// Outcome of scanning one defining inequality.  When the property fails, the
// witness is the lexicographically smallest index (or index pair) where it
// does, together with both sides of the inequality evaluated there.  Single-
// index witnesses store the index in `k` and leave `j` at zero.
template <class V>
struct Verdict {
    bool holds = true;
    int j = 0;
    int k = 0;
    V lhs{};
    V rhs{};

    bool has_pair_witness() const { return !holds && j != 0; }

    static Verdict pass() { return Verdict{}; }
    static Verdict fail_at(int k, V lhs, V rhs) { return Verdict{false, 0, k, std::move(lhs), std::move(rhs)}; }
    static Verdict fail_at_pair(int j, int k, V lhs, V rhs) {
        return Verdict{false, j, k, std::move(lhs), std::move(rhs)};
    }

    friend bool operator==(const Verdict& a, const Verdict& b) {
        if (a.holds != b.holds) return false;
        if (a.holds) return true;
        return a.j == b.j && a.k == b.k && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

// Rendering helpers.  Human-facing output uses %.7g for doubles and exact
// "p/q" for rationals; machine-facing output (certificates, --json) uses
// %.17g so doubles round-trip bit for bit.
inline std::string format_value(const Rational& v) { return v.str(); }

inline std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.7g", v);
    return buf;
}

inline std::string format_value_precise(const Rational& v) { return v.str(); }

inline std::string format_value_precise(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class V>
std::string describe(const Verdict<V>& v) {
    if (v.holds) return "holds";
    std::string at = v.has_pair_witness()
                         ? "(" + std::to_string(v.j) + "," + std::to_string(v.k) + ")"
                         : std::to_string(v.k);
    return "fails at " + at + " (" + format_value(v.lhs) + " vs " + format_value(v.rhs) + ")";
}

}  // namespace tiltkit
