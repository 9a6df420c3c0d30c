#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "tiltkit/errors.hpp"

namespace tiltkit {

enum class Family {
    salvia_bollinger,        // F̄(k) = c^k / k!,              0 < c <= 1
    type1_discrete_weibull,  // F̄(k) = q^(k^beta),            0 < q < 1, beta > 0
    discrete_s,              // F̄(k) = prod_{i=1..k}(1 - p + p a^i), 0 < p <= 1, 0 < a < 1
    discrete_pareto,         // F̄(k) = (d / (k + d))^c,       c > 0, d > 0
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::salvia_bollinger: return "salvia_bollinger";
        case Family::type1_discrete_weibull: return "type1_discrete_weibull";
        case Family::discrete_s: return "discrete_s";
        case Family::discrete_pareto: return "discrete_pareto";
    }
    return "?";
}

// A countable-support lifetime distribution evaluated in double precision on
// {1, ..., horizon}.  The survival table is computed once, straight from the
// defining formula of each family, and checked for 0 < F̄(k+1) < F̄(k) <= 1
// across the whole horizon so later code may divide by any in-horizon
// survival value without guards.
class ParametricSurvival {
public:
    using value_type = double;

    static ParametricSurvival salvia_bollinger(double c, int horizon = kDefaultHorizon) {
        if (!(c > 0.0 && c <= 1.0)) {
            throw InvalidParameterError("salvia_bollinger needs 0 < c <= 1, got c=" + std::to_string(c));
        }
        return ParametricSurvival(Family::salvia_bollinger, c, 0.0, horizon);
    }

    static ParametricSurvival type1_discrete_weibull(double q, double beta, int horizon = kDefaultHorizon) {
        if (!(q > 0.0 && q < 1.0)) {
            throw InvalidParameterError("type1_discrete_weibull needs 0 < q < 1, got q=" + std::to_string(q));
        }
        if (!(beta > 0.0)) {
            throw InvalidParameterError("type1_discrete_weibull needs beta > 0, got beta=" + std::to_string(beta));
        }
        return ParametricSurvival(Family::type1_discrete_weibull, q, beta, horizon);
    }

    static ParametricSurvival discrete_s(double p, double a, int horizon = kDefaultHorizon) {
        if (!(p > 0.0 && p <= 1.0)) {
            throw InvalidParameterError("discrete_s needs 0 < p <= 1, got p=" + std::to_string(p));
        }
        if (!(a > 0.0 && a < 1.0)) {
            throw InvalidParameterError("discrete_s needs 0 < a < 1, got a=" + std::to_string(a));
        }
        return ParametricSurvival(Family::discrete_s, p, a, horizon);
    }

    static ParametricSurvival discrete_pareto(double c, double d, int horizon = kDefaultHorizon) {
        if (!(c > 0.0)) {
            throw InvalidParameterError("discrete_pareto needs c > 0, got c=" + std::to_string(c));
        }
        if (!(d > 0.0)) {
            throw InvalidParameterError("discrete_pareto needs d > 0, got d=" + std::to_string(d));
        }
        return ParametricSurvival(Family::discrete_pareto, c, d, horizon);
    }

    static constexpr int kDefaultHorizon = 200;

    Family family() const { return fam_; }
    double param1() const { return p1_; }
    double param2() const { return p2_; }
    int horizon() const { return static_cast<int>(surv_.size()) - 1; }
    int last_index() const { return horizon(); }

    // F̄(k) for 0 <= k <= horizon.
    double survival(int k) const {
        require_in_horizon(k, 0);
        return surv_[static_cast<std::size_t>(k)];
    }

    // f(k) = F̄(k-1) - F̄(k), for 1 <= k <= horizon.
    double pmf(int k) const {
        require_in_horizon(k, 1);
        return surv_[static_cast<std::size_t>(k - 1)] - surv_[static_cast<std::size_t>(k)];
    }

    // r(k) = f(k) / F̄(k-1), for 1 <= k <= horizon.
    double hazard_at(int k) const {
        require_in_horizon(k, 1);
        return pmf(k) / surv_[static_cast<std::size_t>(k - 1)];
    }

    // r̃(k) = f(k) / F(k), for 1 <= k <= horizon (F(k) > 0 always holds here).
    double reversed_hazard_at(int k) const {
        require_in_horizon(k, 1);
        double F = 1.0 - surv_[static_cast<std::size_t>(k)];
        if (!(F > 0.0)) {
            throw ZeroCdfError("reversed hazard undefined at k=" + std::to_string(k) + ": cdf is zero");
        }
        return pmf(k) / F;
    }

private:
    ParametricSurvival(Family fam, double p1, double p2, int horizon)
        : fam_(fam), p1_(p1), p2_(p2) {
        if (horizon < 1) {
            throw InvalidParameterError("horizon must be >= 1, got " + std::to_string(horizon));
        }
        surv_.resize(static_cast<std::size_t>(horizon) + 1);
        surv_[0] = 1.0;
        for (int k = 1; k <= horizon; ++k) {
            surv_[static_cast<std::size_t>(k)] = survival_formula(k);
        }
        for (int k = 1; k <= horizon; ++k) {
            double prev = surv_[static_cast<std::size_t>(k - 1)];
            double cur = surv_[static_cast<std::size_t>(k)];
            if (!(cur > 0.0) || !(cur < prev) || !(prev <= 1.0) || !std::isfinite(cur)) {
                throw InvalidParameterError(std::string("survival of ") + family_name(fam_) +
                                            " is not strictly decreasing and positive at k=" +
                                            std::to_string(k) + " (shrink the horizon or adjust parameters)");
            }
        }
    }

    double survival_formula(int k) const {
        switch (fam_) {
            case Family::salvia_bollinger: {
                // c^k / k! via a running product: each step multiplies c/i.
                double s = 1.0;
                for (int i = 1; i <= k; ++i) s *= p1_ / static_cast<double>(i);
                return s;
            }
            case Family::type1_discrete_weibull:
                return std::pow(p1_, std::pow(static_cast<double>(k), p2_));
            case Family::discrete_s: {
                double s = 1.0;
                double ai = 1.0;
                for (int i = 1; i <= k; ++i) {
                    ai *= p2_;
                    s *= 1.0 - p1_ + p1_ * ai;
                }
                return s;
            }
            case Family::discrete_pareto:
                return std::pow(p2_ / (static_cast<double>(k) + p2_), p1_);
        }
        return 0.0;
    }

    void require_in_horizon(int k, int lo) const {
        if (k < lo) throw BeyondSupportError("index " + std::to_string(k) + " below " + std::to_string(lo));
        if (k > horizon()) {
            throw HorizonExceededError("index " + std::to_string(k) + " beyond horizon " +
                                       std::to_string(horizon()));
        }
    }

    Family fam_;
    double p1_;
    double p2_;
    std::vector<double> surv_;
};

}  // namespace tiltkit
