#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "tiltkit/finite_pmf.hpp"
#include "tiltkit/rational.hpp"
#include "tiltkit/tilt.hpp"

namespace tt = tiltkit;

inline tt::Rational R(const std::string& s) { return tt::Rational::parse(s); }

inline tt::FinitePmf pmf(const std::vector<std::string>& weights) {
    return tt::FinitePmf::from_strings(weights);
}

inline tt::TiltParameter alpha(const std::string& s) { return tt::TiltParameter::parse(s); }

inline bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline std::vector<std::string> weight_strings(const tt::FinitePmf& d) {
    std::vector<std::string> out;
    for (const auto& w : d.weights()) out.push_back(w.str());
    return out;
}
