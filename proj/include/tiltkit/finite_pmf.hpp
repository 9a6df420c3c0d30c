#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tiltkit/errors.hpp"
#include "tiltkit/rational.hpp"

namespace tiltkit {

// A probability mass function on {1, 2, ..., n} with exact rational weights.
// Invariants established at construction and never broken afterwards:
//   * every weight is >= 0 and the weights sum to exactly 1;
//   * trailing zero weights are trimmed, so f(n) > 0;
//   * the survival table F̄(0..n) is precomputed exactly, with F̄(0) = 1,
//     F̄(k) = F̄(k-1) - f(k), F̄(n) = 0, and F̄ nonincreasing.
// Leading/interior zero weights are legal (a distribution may start later
// than 1); f and F̄ are defined for every index, with f(k) = 0 and
// F̄(k) = 0 for k > n.
class FinitePmf {
public:
    using value_type = Rational;

    static FinitePmf from_weights(std::vector<Rational> weights) {
        return FinitePmf(std::move(weights));
    }

    static FinitePmf from_strings(const std::vector<std::string>& weights) {
        std::vector<Rational> w;
        w.reserve(weights.size());
        for (const auto& s : weights) w.push_back(Rational::parse(s));
        return FinitePmf(std::move(w));
    }

    // Largest index with positive mass.
    int last_index() const { return static_cast<int>(w_.size()); }

    // Smallest index with positive mass (= smallest k with F(k) > 0).
    int first_positive_index() const { return first_positive_; }

    // f(k) for any k >= 1 (zero beyond the support).
    const Rational& weight(int k) const {
        static const Rational zero(0);
        if (k < 1) throw BeyondSupportError("pmf index must be >= 1, got " + std::to_string(k));
        if (k > last_index()) return zero;
        return w_[static_cast<std::size_t>(k - 1)];
    }

    // F̄(k) = P(X > k) for any k >= 0; F̄(0) = 1, zero beyond the support.
    const Rational& survival(int k) const {
        static const Rational zero(0);
        if (k < 0) throw BeyondSupportError("survival index must be >= 0, got " + std::to_string(k));
        if (k > last_index()) return zero;
        return surv_[static_cast<std::size_t>(k)];
    }

    // F(k) = P(X <= k) for any k >= 0; one beyond the support.
    Rational cdf(int k) const { return Rational(1) - survival(k); }

    // r(k) = f(k) / F̄(k-1), defined for 1 <= k <= n; r(n) = 1 exactly.
    Rational hazard_at(int k) const {
        require_in_support(k, "hazard");
        return weight(k) / survival(k - 1);
    }

    // r̃(k) = f(k) / F(k), defined for 1 <= k <= n where F(k) > 0.
    Rational reversed_hazard_at(int k) const {
        require_in_support(k, "reversed hazard");
        Rational F = cdf(k);
        if (F.is_zero()) {
            throw ZeroCdfError("reversed hazard undefined at k=" + std::to_string(k) + ": cdf is zero");
        }
        return weight(k) / F;
    }

    // θ(k) = F̄(k) / F(k), defined for 1 <= k <= n where F(k) > 0.
    Rational odds_at(int k) const {
        require_in_support(k, "odds");
        Rational F = cdf(k);
        if (F.is_zero()) {
            throw ZeroCdfError("odds undefined at k=" + std::to_string(k) + ": cdf is zero");
        }
        return survival(k) / F;
    }

    const std::vector<Rational>& weights() const { return w_; }

    friend bool operator==(const FinitePmf& a, const FinitePmf& b) { return a.w_ == b.w_; }
    friend bool operator!=(const FinitePmf& a, const FinitePmf& b) { return !(a == b); }

private:
    explicit FinitePmf(std::vector<Rational> weights) {
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i].sign() < 0) {
                throw NegativeWeightError("pmf weight at index " + std::to_string(i + 1) +
                                          " is negative: " + weights[i].str());
            }
        }
        while (!weights.empty() && weights.back().is_zero()) weights.pop_back();
        Rational total(0);
        for (const auto& w : weights) total += w;
        if (total != Rational(1)) {
            throw WeightSumError("pmf weights must sum to exactly 1, got " + total.str());
        }
        w_ = std::move(weights);
        surv_.reserve(w_.size() + 1);
        surv_.push_back(Rational(1));
        for (const auto& w : w_) surv_.push_back(surv_.back() - w);
        first_positive_ = 1;
        while (w_[static_cast<std::size_t>(first_positive_ - 1)].is_zero()) ++first_positive_;
    }

    void require_in_support(int k, const char* what) const {
        if (k < 1 || k > last_index()) {
            throw BeyondSupportError(std::string(what) + " index " + std::to_string(k) +
                                     " outside support 1.." + std::to_string(last_index()));
        }
    }

    std::vector<Rational> w_;
    std::vector<Rational> surv_;
    int first_positive_ = 1;
};

}  // namespace tiltkit
