#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "wmcs/errors.hpp"

namespace wmcs {

/// Exact rational number with a 64-bit numerator and positive denominator.
/// All intermediate products go through 128-bit arithmetic; a result that
/// does not fit back into 64 bits throws OverflowError instead of wrapping.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(long long numerator, long long denominator);
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(int n) : num_(n), den_(1) {}        // NOLINT

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Renders as "p/q", or just "p" when q == 1.
    std::string str() const;

    /// Parses "p/q", "p", or "-p/q". Throws SchemaError on malformed input.
    static Rational parse(const std::string& text);

    static Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
    static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

  private:
    long long num_;
    long long den_;  // > 0, gcd(|num_|, den_) == 1
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational operator*(long long k, const Rational& r) { return Rational(k) * r; }

}  // namespace wmcs
