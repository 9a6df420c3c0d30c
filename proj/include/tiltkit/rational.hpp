#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "tiltkit/errors.hpp"

namespace tiltkit {

// Exact rational number in canonical form (lowest terms, positive
// denominator).  Arbitrary-precision: survival cross-powers like
// F̄(k)^(k+1) at k ~ 200 overflow any fixed-width integer, so the backing
// store must grow.  The wrapper keeps the backend out of every signature and
// guarantees each operation returns a fully materialized value.
class Rational {
public:
    using backend = boost::multiprecision::cpp_rational;
    using integer = boost::multiprecision::cpp_int;

    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(long long n) : v_(n) {}           // NOLINT: implicit by design
    explicit Rational(backend v) : v_(std::move(v)) {}

    Rational(long long num, long long den) : Rational(integer(num), integer(den)) {}

    Rational(integer num, integer den) {
        if (den == 0) {
            throw ZeroDenominatorError("rational denominator must be nonzero");
        }
        if (den < 0) {  // the backend insists on a positive denominator
            num = -num;
            den = -den;
        }
        v_ = backend(std::move(num), std::move(den));  // canonicalizes
    }

    // Accepts "p", "-p", "p/q" with optional leading sign on p; q > 0 after
    // normalization.  Anything else is a ParseError.
    static Rational parse(std::string_view text) {
        const auto bad = [&]() -> ParseError {
            return ParseError("not a rational literal: '" + std::string(text) + "'");
        };
        if (text.empty()) throw bad();
        std::size_t slash = text.find('/');
        std::string_view num_part = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
        if (!is_signed_integer(num_part)) throw bad();
        if (num_part.front() == '+') num_part.remove_prefix(1);  // backend rejects '+'
        if (slash == std::string_view::npos) {
            return Rational(backend(integer(std::string(num_part))));
        }
        std::string_view den_part = text.substr(slash + 1);
        if (!is_signed_integer(den_part)) throw bad();
        if (den_part.front() == '+') den_part.remove_prefix(1);
        integer num{std::string(num_part)};
        integer den{std::string(den_part)};
        if (den == 0) {
            throw ZeroDenominatorError("rational denominator must be nonzero: '" + std::string(text) + "'");
        }
        return Rational(std::move(num), std::move(den));
    }

    // Canonical text: "p/q", or just "p" when the denominator is one.
    std::string str() const {
        integer n = boost::multiprecision::numerator(v_);
        integer d = boost::multiprecision::denominator(v_);
        if (d == 1) return n.str();
        return n.str() + "/" + d.str();
    }

    integer numerator() const { return boost::multiprecision::numerator(v_); }
    integer denominator() const { return boost::multiprecision::denominator(v_); }

    double to_double() const { return v_.convert_to<double>(); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(backend(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(backend(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(backend(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_.is_zero()) throw ZeroDenominatorError("division by zero rational");
        return Rational(backend(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(backend(-v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static bool is_signed_integer(std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    }

    backend v_;
};

// Exact integer power.  Negative exponents invert; 0^negative throws.
inline Rational pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base.is_zero()) throw ZeroDenominatorError("zero cannot be raised to a negative power");
        return Rational(1) / pow(base, -exp);
    }
    Rational result(1);
    Rational b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e != 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace tiltkit
