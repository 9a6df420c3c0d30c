#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "tiltkit/errors.hpp"
#include "tiltkit/finite_pmf.hpp"
#include "tiltkit/parametric.hpp"
#include "tiltkit/rational.hpp"

namespace tiltkit {

// The odds-scaling transform parameter alpha > 0, kept exact so that the
// finite-pmf path never touches floating point.  alpha = 1 is the identity
// transform; composing transforms multiplies their parameters.
class TiltParameter {
public:
    explicit TiltParameter(Rational alpha) : alpha_(std::move(alpha)) {
        if (!(alpha_ > Rational(0))) {
            throw InvalidTiltParameterError("tilt parameter must be > 0, got " + alpha_.str());
        }
    }

    static TiltParameter parse(std::string_view text) { return TiltParameter(Rational::parse(text)); }

    const Rational& alpha() const { return alpha_; }
    Rational alpha_bar() const { return Rational(1) - alpha_; }
    double alpha_double() const { return alpha_.to_double(); }

    bool is_identity() const { return alpha_ == Rational(1); }
    bool raises() const { return alpha_ > Rational(1); }   // survival goes up
    bool lowers() const { return alpha_ < Rational(1); }   // survival goes down

    friend TiltParameter compose(const TiltParameter& first, const TiltParameter& second) {
        return TiltParameter(first.alpha_ * second.alpha_);
    }

private:
    Rational alpha_;
};

namespace detail {

// Smallest value the tilt denominator 1 - (1-alpha)*F̄ can take for
// F̄ in [0, 1]: min(alpha, 1).  Checked at every evaluation in debug builds.
inline void check_denominator(const Rational& den, const Rational& alpha) {
    (void)den;
    (void)alpha;
    assert(den >= (alpha < Rational(1) ? alpha : Rational(1)));
}

inline void check_denominator(double den, double alpha) {
    (void)den;
    (void)alpha;
    assert(den >= (alpha < 1.0 ? alpha : 1.0) - 1e-9);
}

}  // namespace detail

// Ḡ = alpha F̄ / (1 - (1 - alpha) F̄), the survival function whose odds are
// the base odds scaled by alpha.  Works on exact rationals and on doubles.
template <class T>
T tilted_survival_value(const T& fbar, const T& alpha) {
    T den = T(1) - (T(1) - alpha) * fbar;
    detail::check_denominator(den, alpha);
    return alpha * fbar / den;
}

inline Rational tilt_survival_at(const FinitePmf& d, const TiltParameter& t, int k) {
    return tilted_survival_value(d.survival(k), t.alpha());
}

inline Rational tilt_cdf_at(const FinitePmf& d, const TiltParameter& t, int k) {
    return Rational(1) - tilt_survival_at(d, t, k);
}

// g(k) = Ḡ(k-1) - Ḡ(k); algebraically also
// alpha f(k) / ((1 - ᾱF̄(k-1)) (1 - ᾱF̄(k))), so the transformed pmf keeps
// exactly the zero pattern of the base pmf.  Telescoping makes the exact
// weights sum to one by construction.
inline FinitePmf tilt_pmf(const FinitePmf& d, const TiltParameter& t) {
    std::vector<Rational> g;
    int n = d.last_index();
    g.reserve(static_cast<std::size_t>(n));
    Rational prev = tilt_survival_at(d, t, 0);
    for (int k = 1; k <= n; ++k) {
        Rational cur = tilt_survival_at(d, t, k);
        g.push_back(prev - cur);
        prev = cur;
    }
    return FinitePmf::from_weights(std::move(g));
}

// r_Y(k) = r_X(k) / (1 - ᾱ F̄_X(k)): the transformed hazard in terms of base
// quantities, without materializing the transformed pmf.
inline Rational tilt_hazard_at(const FinitePmf& d, const TiltParameter& t, int k) {
    Rational den = Rational(1) - t.alpha_bar() * d.survival(k);
    detail::check_denominator(den, t.alpha());
    return d.hazard_at(k) / den;
}

// r̃_Y(k) = alpha r̃_X(k) / (1 - ᾱ F̄_X(k-1)).
inline Rational tilt_reversed_hazard_at(const FinitePmf& d, const TiltParameter& t, int k) {
    Rational den = Rational(1) - t.alpha_bar() * d.survival(k - 1);
    detail::check_denominator(den, t.alpha());
    return t.alpha() * d.reversed_hazard_at(k) / den;
}

// θ_Y(k) = alpha θ_X(k): odds scaling is the defining property of the
// transform.
inline Rational tilt_odds_at(const FinitePmf& d, const TiltParameter& t, int k) {
    return t.alpha() * d.odds_at(k);
}

// Lazy double-precision view of a tilted parametric curve.  Owns a copy of
// the base curve; evaluation applies the survival transform pointwise.
class TiltedSurvival {
public:
    using value_type = double;

    TiltedSurvival(ParametricSurvival base, const TiltParameter& t)
        : base_(std::move(base)), alpha_(t.alpha_double()) {}

    int horizon() const { return base_.horizon(); }
    int last_index() const { return base_.horizon(); }
    const ParametricSurvival& base() const { return base_; }
    double alpha() const { return alpha_; }

    double survival(int k) const { return tilted_survival_value(base_.survival(k), alpha_); }
    double pmf(int k) const { return survival(k - 1) - survival(k); }
    double hazard_at(int k) const { return pmf(k) / survival(k - 1); }
    double reversed_hazard_at(int k) const {
        double F = 1.0 - survival(k);
        if (!(F > 0.0)) {
            throw ZeroCdfError("reversed hazard undefined at k=" + std::to_string(k) + ": cdf is zero");
        }
        return pmf(k) / F;
    }

private:
    ParametricSurvival base_;
    double alpha_;
};

inline TiltedSurvival tilt_curve(const ParametricSurvival& base, const TiltParameter& t) {
    return TiltedSurvival(base, t);
}

}  // namespace tiltkit
