#pragma once

#include <stdexcept>
#include <string>

namespace tiltkit {

// Root of the library's error hierarchy.  Everything the library throws on
// bad input derives from this, so callers can catch one type at the boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Rational construction/parsing with a zero denominator.
class ZeroDenominatorError : public Error {
public:
    explicit ZeroDenominatorError(const std::string& what) : Error(what) {}
};

// Text that does not parse as the requested value ("p/q", JSON, ...).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A finite pmf weight below zero.
class NegativeWeightError : public Error {
public:
    explicit NegativeWeightError(const std::string& what) : Error(what) {}
};

// Finite pmf weights whose exact sum is not one.
class WeightSumError : public Error {
public:
    explicit WeightSumError(const std::string& what) : Error(what) {}
};

// An index outside the domain of the requested quantity.
class BeyondSupportError : public Error {
public:
    explicit BeyondSupportError(const std::string& what) : Error(what) {}
};

// Reversed hazard or odds requested where the cdf is still zero.
class ZeroCdfError : public Error {
public:
    explicit ZeroCdfError(const std::string& what) : Error(what) {}
};

// Parametric family parameter outside its legal domain, or a survival table
// that lost strict positivity/monotonicity to floating-point underflow.
class InvalidParameterError : public Error {
public:
    explicit InvalidParameterError(const std::string& what) : Error(what) {}
};

// Evaluation of a parametric curve past its configured horizon.
class HorizonExceededError : public Error {
public:
    explicit HorizonExceededError(const std::string& what) : Error(what) {}
};

// A tilt parameter alpha <= 0.
class InvalidTiltParameterError : public Error {
public:
    explicit InvalidTiltParameterError(const std::string& what) : Error(what) {}
};

// A scan window that contains no checkable index for the requested property.
class EmptyWindowError : public Error {
public:
    explicit EmptyWindowError(const std::string& what) : Error(what) {}
};

// A preservation trial whose generated/base instance fails the hypothesis.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& what) : Error(what) {}
};

}  // namespace tiltkit
