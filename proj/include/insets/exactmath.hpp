#pragma once

// Exact integer arithmetic shared by every module.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace insets {

/// Unbounded signed integer. Zero has a single representation.
using BigInt = boost::multiprecision::cpp_int;

/// C(a, b). Zero when b < 0 or b > a; a < 0 throws std::invalid_argument.
BigInt binomial(std::int64_t a, std::int64_t b);

/// base^exp for exp >= 0.
BigInt power(std::int64_t base, std::int64_t exp);

/// True when divisor divides value exactly. divisor must be nonzero.
bool divides(const BigInt& divisor, const BigInt& value);

/// Trial division.
bool isPrime(std::int64_t q);

/// +1 for even i, -1 for odd i.
inline int alternatingSign(std::int64_t i) { return (i % 2 == 0) ? 1 : -1; }

std::string toString(const BigInt& value);

/// Parses an optionally signed decimal string. Throws std::invalid_argument on junk.
BigInt parseBigInt(const std::string& text);

}  // namespace insets
