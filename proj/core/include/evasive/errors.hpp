#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace evasive {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inverse of zero requested.
struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero") {}
};

/// Arithmetic between scalars bound to different primes.
struct FieldMismatch : Error {
    FieldMismatch() : Error("mixed-field arithmetic") {}
};

/// gcd(0, 0) requested.
struct BothZero : Error {
    BothZero() : Error("gcd of two zero polynomials") {}
};

/// Forms cut out the empty projective set (irrelevant ideal).
struct DegenerateSubspace : Error {
    DegenerateSubspace() : Error("forms cut out the empty projective set") {}
};

/// Buchberger pair budget exhausted; the instance is beyond desk scale.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(std::uint64_t budget)
        : Error("groebner pair budget of " + std::to_string(budget) + " exceeded"),
          budget(budget) {}
    std::uint64_t budget;
};

/// The field prime cannot supply the requested sample set.
struct FieldTooSmall : Error {
    FieldTooSmall(std::uint64_t prime, std::uint64_t required)
        : Error("field of size " + std::to_string(prime) +
                " too small: need prime > " + std::to_string(required)),
          prime(prime), required(required) {}
    std::uint64_t prime;
    std::uint64_t required;  // construction needs p > required
};

/// Every candidate in the sample set kills some supplied point.
struct NoWitness : Error {
    NoWitness() : Error("no witness in the sample set avoids all points") {}
};

/// A construction pruned or dropped every member.
struct EmptyFamily : Error {
    explicit EmptyFamily(const std::string& what) : Error(what) {}
};

/// Parameters do not fit the construction's shape requirements.
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

/// The requested verification oracle does not apply to the variety.
struct OracleMismatch : Error {
    explicit OracleMismatch(const std::string& what) : Error(what) {}
};

/// Malformed input text (polynomials, files, CLI rationals).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace evasive
