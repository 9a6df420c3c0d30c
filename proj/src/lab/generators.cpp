#include "tiltkit/lab/generators.hpp"

#include <algorithm>
#include <string>

#include "tiltkit/errors.hpp"

namespace tiltkit::lab {

namespace {

constexpr int kMaxRejectionAttempts = 5000;

Rational ratio(int num, int den) { return Rational(num, den); }

}  // namespace

FinitePmf random_pmf(SplitMix64& rng, int max_support, int max_denominator) {
    if (max_support < 1 || max_denominator < 1) {
        throw Error("random_pmf needs max_support >= 1 and max_denominator >= 1");
    }
    int n = rng.uniform_int(1, max_support);
    std::vector<Rational> weights(static_cast<std::size_t>(n));
    long long total = 0;
    std::vector<int> raw(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int lo = (i == n - 1) ? 1 : 0;  // positive last part keeps the drawn support size
        raw[static_cast<std::size_t>(i)] = rng.uniform_int(lo, max_denominator);
        total += raw[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i) {
        weights[static_cast<std::size_t>(i)] = Rational(raw[static_cast<std::size_t>(i)], total);
    }
    return FinitePmf::from_weights(std::move(weights));
}

FinitePmf random_increasing_hazard_pmf(SplitMix64& rng, int max_support, int max_denominator) {
    if (max_denominator < 2) throw Error("increasing-hazard builder needs max_denominator >= 2");
    int n = rng.uniform_int(1, max_support);
    std::vector<Rational> hazards;
    hazards.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) {
        hazards.push_back(ratio(rng.uniform_int(1, max_denominator - 1), max_denominator));
    }
    std::sort(hazards.begin(), hazards.end());
    hazards.push_back(Rational(1));  // the forced final step

    std::vector<Rational> weights;
    weights.reserve(static_cast<std::size_t>(n));
    Rational surv(1);
    for (const Rational& r : hazards) {
        weights.push_back(surv * r);
        surv *= Rational(1) - r;
    }
    return FinitePmf::from_weights(std::move(weights));
}

bool finite_hypothesis_feasible(AgeingProperty p) {
    switch (p) {
        case AgeingProperty::dfr:
        case AgeingProperty::dfra:
        case AgeingProperty::nwu:
            // On a full finite support the forced last hazard step r(n) = 1
            // (resp. the survival hitting zero) rules out every instance but
            // a point mass; hypotheses live on parametric curves instead.
            return false;
        default:
            return true;
    }
}

FinitePmf random_pmf_with(AgeingProperty p, SplitMix64& rng, int max_support, int max_denominator) {
    if (!finite_hypothesis_feasible(p)) {
        throw HypothesisError(std::string(ageing_name(p)) +
                              " has only degenerate full-support finite instances; "
                              "draw a parametric instance instead");
    }
    if (p == AgeingProperty::ifr) {
        return random_increasing_hazard_pmf(rng, max_support, max_denominator);
    }
    for (int attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
        FinitePmf d = random_pmf(rng, max_support, max_denominator);
        if (check_ageing(p, d).holds) return d;
    }
    throw HypothesisError(std::string("rejection sampling for ") + ageing_name(p) +
                          " found no instance in " + std::to_string(kMaxRejectionAttempts) + " draws");
}

namespace {

double uniform_in(SplitMix64& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.uniform_double();
}

CurveInstance decreasing_hazard_curve(SplitMix64& rng) {
    if (rng.coin()) {
        double q = uniform_in(rng, 0.2, 0.9);
        double beta = uniform_in(rng, 0.3, 0.95);  // beta < 1: hazard decreases
        return {ParametricSurvival::type1_discrete_weibull(q, beta, 40), Window{1, 30}};
    }
    double c = uniform_in(rng, 0.5, 4.0);
    double d = uniform_in(rng, 0.5, 5.0);
    return {ParametricSurvival::discrete_pareto(c, d, 40), Window{1, 30}};
}

CurveInstance increasing_hazard_curve(SplitMix64& rng) {
    if (rng.coin()) {
        double c = uniform_in(rng, 0.1, 0.95);
        return {ParametricSurvival::salvia_bollinger(c, 30), Window{1, 25}};
    }
    double p = uniform_in(rng, 0.1, 0.9);
    double a = uniform_in(rng, 0.3, 0.9);
    return {ParametricSurvival::discrete_s(p, a, 40), Window{1, 30}};
}

}  // namespace

CurveInstance random_curve_with(AgeingProperty p, SplitMix64& rng) {
    CurveInstance inst = [&] {
        switch (p) {
            case AgeingProperty::dfr:
            case AgeingProperty::dfra:
            case AgeingProperty::nwu:
                return decreasing_hazard_curve(rng);
            case AgeingProperty::ifr:
            case AgeingProperty::ifra:
            case AgeingProperty::nbu:
                return increasing_hazard_curve(rng);
            default:
                throw HypothesisError(std::string("no parametric instance family for ") + ageing_name(p));
        }
    }();
    if (!check_ageing(p, inst.curve, inst.window).holds) {
        throw HypothesisError(std::string("parametric draw unexpectedly fails ") + ageing_name(p));
    }
    return inst;
}

namespace {

std::pair<FinitePmf, FinitePmf> shifted_mass_pair(SplitMix64& rng, int max_support, int max_denominator) {
    FinitePmf a = random_pmf(rng, max_support, max_denominator);
    int n = a.last_index();
    std::vector<Rational> up(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 1; i <= n; ++i) {
        int target = rng.coin() ? i + 1 : i;  // mass only ever moves right
        up[static_cast<std::size_t>(target - 1)] += a.weight(i);
    }
    return {a, FinitePmf::from_weights(std::move(up))};
}

std::pair<FinitePmf, FinitePmf> hazard_dominated_pair(SplitMix64& rng, int max_support, int max_denominator) {
    FinitePmf b = random_pmf(rng, max_support, max_denominator);
    int n = b.last_index();
    std::vector<Rational> wa;
    wa.reserve(static_cast<std::size_t>(n));
    Rational cum(1);
    Rational prev(1);  // F̄_a(k-1)
    for (int k = 1; k <= n; ++k) {
        cum *= ratio(rng.uniform_int(1, max_denominator), max_denominator);
        Rational cur = b.survival(k) * cum;
        wa.push_back(prev - cur);
        prev = cur;
    }
    return {FinitePmf::from_weights(std::move(wa)), b};
}

FinitePmf pmf_from_reversed_hazards(const std::vector<Rational>& rh) {
    // rh[k-2] = r̃(k) for k = 2..n; the cdf is rebuilt from the top down.
    int n = static_cast<int>(rh.size()) + 1;
    std::vector<Rational> cdf(static_cast<std::size_t>(n) + 1);
    cdf[static_cast<std::size_t>(n)] = Rational(1);
    for (int k = n; k >= 2; --k) {
        cdf[static_cast<std::size_t>(k - 1)] =
            cdf[static_cast<std::size_t>(k)] * (Rational(1) - rh[static_cast<std::size_t>(k - 2)]);
    }
    std::vector<Rational> w(static_cast<std::size_t>(n));
    w[0] = cdf[1];
    for (int k = 2; k <= n; ++k) {
        w[static_cast<std::size_t>(k - 1)] =
            cdf[static_cast<std::size_t>(k)] - cdf[static_cast<std::size_t>(k - 1)];
    }
    return FinitePmf::from_weights(std::move(w));
}

std::pair<FinitePmf, FinitePmf> reversed_hazard_dominated_pair(SplitMix64& rng, int max_support,
                                                               int max_denominator) {
    int n = std::max(2, rng.uniform_int(1, max_support));
    std::vector<Rational> rb;  // r̃_b(2..n), each in (0, 1)
    rb.reserve(static_cast<std::size_t>(n) - 1);
    for (int k = 2; k <= n; ++k) {
        rb.push_back(ratio(rng.uniform_int(1, max_denominator - 1), max_denominator));
    }
    std::vector<Rational> ra;  // r̃_a = v * r̃_b with v in (0, 1]
    ra.reserve(rb.size());
    for (const Rational& r : rb) {
        ra.push_back(r * ratio(rng.uniform_int(1, max_denominator), max_denominator));
    }
    return {pmf_from_reversed_hazards(ra), pmf_from_reversed_hazards(rb)};
}

std::pair<FinitePmf, FinitePmf> likelihood_reweighted_pair(SplitMix64& rng, int max_support,
                                                           int max_denominator) {
    FinitePmf a = random_pmf(rng, max_support, max_denominator);
    int n = a.last_index();
    Rational rho(1);
    std::vector<Rational> wb;
    wb.reserve(static_cast<std::size_t>(n));
    Rational total(0);
    for (int k = 1; k <= n; ++k) {
        rho += ratio(rng.uniform_int(0, max_denominator), max_denominator);  // nondecreasing factor
        wb.push_back(a.weight(k) * rho);
        total += wb.back();
    }
    for (auto& w : wb) w /= total;
    return {a, FinitePmf::from_weights(std::move(wb))};
}

}  // namespace

std::pair<FinitePmf, FinitePmf> random_pair_with(OrderRelation rel, SplitMix64& rng, int max_support,
                                                 int max_denominator) {
    auto pair = [&] {
        switch (rel) {
            case OrderRelation::st: return shifted_mass_pair(rng, max_support, max_denominator);
            case OrderRelation::hr: return hazard_dominated_pair(rng, max_support, max_denominator);
            case OrderRelation::rhr: return reversed_hazard_dominated_pair(rng, max_support, max_denominator);
            case OrderRelation::lr: return likelihood_reweighted_pair(rng, max_support, max_denominator);
        }
        throw Error("unknown order relation");
    }();
    if (!check_order(rel, pair.first, pair.second).holds) {
        throw HypothesisError(std::string("constructed pair unexpectedly fails ") + order_name(rel));
    }
    return pair;
}

PmfEnumerator::PmfEnumerator(int max_support, int max_total)
    : max_support_(max_support), max_total_(max_total), total_(1), parts_(1) {
    if (max_support < 1 || max_total < 1) throw Error("enumerator needs positive caps");
}

bool PmfEnumerator::advance_parts() {
    // Next composition of total_ into parts_ nonnegative parts with a
    // positive last part, in ascending lexicographic order.
    if (fresh_shape_) {
        current_.assign(static_cast<std::size_t>(parts_), 0);
        current_.back() = total_;
        fresh_shape_ = false;
        return true;
    }
    // Move one unit from the tail into the rightmost bumpable slot.
    int n = parts_;
    for (int i = n - 2; i >= 0; --i) {
        int tail = 0;
        for (int j = i + 1; j < n; ++j) tail += current_[static_cast<std::size_t>(j)];
        if (tail > 1) {  // the last part must stay >= 1
            current_[static_cast<std::size_t>(i)] += 1;
            for (int j = i + 1; j < n - 1; ++j) current_[static_cast<std::size_t>(j)] = 0;
            current_[static_cast<std::size_t>(n - 1)] = tail - 1;
            return true;
        }
    }
    return false;
}

std::optional<FinitePmf> PmfEnumerator::next() {
    while (!done_) {
        if (advance_parts()) {
            std::vector<Rational> w;
            w.reserve(current_.size());
            for (int part : current_) w.push_back(Rational(part, total_));
            return FinitePmf::from_weights(std::move(w));
        }
        // Shape exhausted: next parts count, then next total.
        fresh_shape_ = true;
        if (parts_ < max_support_) {
            ++parts_;
        } else if (total_ < max_total_) {
            ++total_;
            parts_ = 1;
        } else {
            done_ = true;
        }
    }
    return std::nullopt;
}

std::vector<FinitePmf> enumerate_pmfs(int max_support, int max_total) {
    std::vector<FinitePmf> out;
    PmfEnumerator en(max_support, max_total);
    while (auto d = en.next()) out.push_back(std::move(*d));
    return out;
}

}  // namespace tiltkit::lab
