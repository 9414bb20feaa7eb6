#pragma once

#include <cstdint>
#include <string>

#include "evasive/errors.hpp"

namespace evasive {

/// Exact rational with canonical form: reduced, denominator > 0.
/// All epsilon bookkeeping and failure fractions go through this type;
/// verdict paths never touch floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    /// ceil(x / *this) for a nonnegative integer x; *this must be positive.
    std::uint64_t ceil_div_into(std::uint64_t x) const;

    /// "a/b" (denominator always printed, even when 1).
    std::string str() const;

    /// Parses "a/b" or a bare integer "a".
    static Rational parse(const std::string& text);

private:
    std::int64_t num_;
    std::int64_t den_;  // > 0
};

}  // namespace evasive
