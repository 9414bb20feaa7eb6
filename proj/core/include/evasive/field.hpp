#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evasive/errors.hpp"

namespace evasive {

/// Default ground-field prime, 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

class Scalar;

/// Configuration of the prime field F_p. Immutable after construction.
/// Primality is checked eagerly; size requirements of individual sample
/// sets are checked by the consuming constructions.
class FieldConfig {
public:
    explicit FieldConfig(std::uint64_t prime = kDefaultPrime, std::string tag = {});

    std::uint64_t prime() const { return prime_; }
    const std::string& tag() const { return tag_; }

    Scalar zero() const;
    Scalar one() const;
    /// Canonical element for an arbitrary unsigned value (reduced mod p).
    Scalar from_uint(std::uint64_t v) const;
    /// Canonical element for a signed value (negative values wrap).
    Scalar from_int(std::int64_t v) const;

    bool operator==(const FieldConfig& o) const { return prime_ == o.prime_; }

private:
    std::uint64_t prime_;
    std::string tag_;
};

/// An element of F_p in canonical representation, bound to its prime.
/// Values are immutable; arithmetic between scalars of different primes
/// throws FieldMismatch rather than coercing.
class Scalar {
public:
    Scalar() : v_(0), p_(0) {}  // unbound zero; usable only after assignment
    Scalar(std::uint64_t canonical_value, std::uint64_t prime) : v_(canonical_value), p_(prime) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t prime() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Scalar operator+(Scalar o) const;
    Scalar operator-(Scalar o) const;
    Scalar operator-() const;
    Scalar operator*(Scalar o) const;
    Scalar& operator+=(Scalar o) { return *this = *this + o; }
    Scalar& operator-=(Scalar o) { return *this = *this - o; }
    Scalar& operator*=(Scalar o) { return *this = *this * o; }

    /// Equal iff bound to the same prime and carrying the same value.
    bool operator==(Scalar o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(Scalar o) const { return !(*this == o); }

private:
    void check_same(Scalar o) const {
        if (p_ != o.p_) throw FieldMismatch();
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

/// base^exp by square-and-multiply; pow(b, 0) = 1.
Scalar pow(Scalar base, std::uint64_t exp);

/// Multiplicative inverse via Fermat; throws ZeroInverse on 0.
Scalar inv(Scalar a);

/// (gamma^0, gamma^1, ..., gamma^{length-1}).
std::vector<Scalar> vandermonde_row(Scalar gamma, std::size_t length);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace evasive
