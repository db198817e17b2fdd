#pragma once

// Chebyshev coefficients built from insets of sets whose main blocks all have
// two elements. With c(n,k,m) = F(n,k,{2,...,2},m), the coefficient of x^s in
// the degree-r polynomial is (-1)^k c(n,k,m) where r = n+k+m, s = n-k+m, and
// m = 1 gives T_r, m = 0 gives U_r.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "insets/exactmath.hpp"
#include "insets/report.hpp"

namespace insets::chebyshev {

enum class Kind { first, second };

Kind parseKind(std::string_view name);
std::string_view toString(Kind kind);

/// Size of the extra block realizing the kind: 1 for T, 0 for U.
std::int64_t extraFor(Kind kind) noexcept;

struct Preimage {
  std::int64_t n;
  std::int64_t k;
  friend bool operator==(const Preimage&, const Preimage&) = default;
};

struct ChebIndex {
  std::int64_t degree;
  std::int64_t power;
  Kind kind;
  std::optional<Preimage> preimage;
};

struct ChebCoefficient {
  ChebIndex index;
  BigInt value;
};

/// Degree outside what the block construction reaches (T_0, T_1, T_2, U_0).
class NotConstructible : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Lowest degree produced by the construction: 3 for T, 1 for U.
std::int64_t lowestConstructibleDegree(Kind kind) noexcept;
bool isConstructible(std::int64_t degree, Kind kind) noexcept;

/// c(n, k, m) for n >= 1 and m in {0, 1}.
BigInt cValue(std::int64_t n, std::int64_t k, std::int64_t m);

/// Solves degree = n+k+m, power = n-k+m with n >= 1, k >= 0.
std::optional<Preimage> solveIndex(std::int64_t degree, std::int64_t power, Kind kind);

ChebIndex makeIndex(std::int64_t degree, std::int64_t power, Kind kind);

/// Coefficient via c(n, k, m). Zero when the power has the wrong parity or
/// exceeds the degree. Throws NotConstructible for the excluded degrees.
BigInt coefficient(std::int64_t degree, std::int64_t power, Kind kind);

/// Same coefficient from the explicit alternating binomial sum, without going
/// through the inset evaluator.
BigInt explicitCoefficient(std::int64_t degree, std::int64_t power, Kind kind);

/// Nonzero coefficients of the degree-r polynomial, highest power first.
std::vector<ChebCoefficient> polynomialCoefficients(std::int64_t degree, Kind kind);

/// Nonzero (power, coefficient) pairs from T/U's three-term recurrence,
/// highest power first. Valid for every degree >= 0.
std::vector<std::pair<std::int64_t, BigInt>> classicalOracle(std::int64_t degree, Kind kind);

/// Per-coefficient comparisons against classicalOracle for degrees in
/// [lowest constructible, maxDegree].
std::vector<IdentityReport> verifyTable(std::int64_t maxDegree, Kind kind);

/// coefficient() vs explicitCoefficient() on every constructible same-parity (r, s).
std::vector<IdentityReport> verifyExplicit(std::int64_t maxDegree, Kind kind);

/// a(r,s) = 2a(r-1,s-1) - a(r-2,s) wherever all three degrees are constructible.
std::vector<IdentityReport> verifyCoefficientRecurrence(std::int64_t maxDegree, Kind kind);

/// c(n,k,m) = 2c(n-1,k,m) + c(n-1,k-1,m) for 2 <= n <= maxN, 0 <= k <= maxK.
std::vector<IdentityReport> verifyCRecurrence(std::int64_t maxN, std::int64_t maxK, std::int64_t m);

}  // namespace insets::chebyshev
