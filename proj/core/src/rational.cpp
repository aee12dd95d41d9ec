#include "wmcs/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>

namespace wmcs {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
        throw OverflowError("rational arithmetic overflowed 64 bits");
    }
    return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw OverflowError("rational with zero denominator");
    i128 n = numerator;
    i128 d = denominator;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-i128(num_));
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    i128 n = i128(num_) * o.num_;
    i128 d = i128(den_) * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw OverflowError("rational division by zero");
    i128 n = i128(num_) * o.den_;
    i128 d = i128(den_) * o.num_;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    i128 lhs = i128(num_) * o.den_;
    i128 rhs = i128(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw SchemaError("empty rational literal");
    auto slash = text.find('/');
    try {
        size_t used = 0;
        long long n = std::stoll(text.substr(0, slash), &used);
        if (slash == std::string::npos) {
            if (used != text.size()) throw SchemaError("trailing junk in rational: " + text);
            return Rational(n);
        }
        std::string den_part = text.substr(slash + 1);
        long long d = std::stoll(den_part, &used);
        if (used != den_part.size()) throw SchemaError("trailing junk in rational: " + text);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw SchemaError("malformed rational literal: " + text);
    } catch (const std::out_of_range&) {
        throw SchemaError("rational literal out of range: " + text);
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wmcs
