#include "insets/chebyshev.hpp"

#include <string>

#include "insets/evaluator.hpp"
#include "insets/profile.hpp"

namespace insets::chebyshev {

Kind parseKind(std::string_view name) {
  if (name == "first" || name == "T") return Kind::first;
  if (name == "second" || name == "U") return Kind::second;
  throw ValidationError("kind", "unknown Chebyshev kind '" + std::string(name) + "' (expected first or second)");
}

std::string_view toString(Kind kind) { return kind == Kind::first ? "first" : "second"; }

std::int64_t extraFor(Kind kind) noexcept { return kind == Kind::first ? 1 : 0; }

std::int64_t lowestConstructibleDegree(Kind kind) noexcept { return kind == Kind::first ? 3 : 1; }

bool isConstructible(std::int64_t degree, Kind kind) noexcept {
  return degree >= lowestConstructibleDegree(kind);
}

BigInt cValue(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (n < 1) throw ValidationError("n", "c(n,k,m) needs n >= 1");
  if (m != 0 && m != 1) throw ValidationError("m", "c(n,k,m) is defined for m in {0, 1}");
  return evaluateEqualBlocks(n, 2, m, k);
}

std::optional<Preimage> solveIndex(std::int64_t degree, std::int64_t power, Kind kind) {
  if (degree < 0 || power < 0 || (degree - power) % 2 != 0) return std::nullopt;
  const std::int64_t n = (degree + power) / 2 - extraFor(kind);
  const std::int64_t k = (degree - power) / 2;
  if (n < 1 || k < 0) return std::nullopt;
  return Preimage{n, k};
}

ChebIndex makeIndex(std::int64_t degree, std::int64_t power, Kind kind) {
  return {degree, power, kind, solveIndex(degree, power, kind)};
}

namespace {

void requireConstructible(std::int64_t degree, Kind kind) {
  if (!isConstructible(degree, kind)) {
    throw NotConstructible(std::string(kind == Kind::first ? "T_" : "U_") + std::to_string(degree) +
                           " is not produced by the block construction (T_0, T_1, T_2 and U_0 are excluded); "
                           "use the classical recurrence");
  }
}

std::vector<Parameter> indexParams(std::int64_t degree, std::int64_t power, Kind kind) {
  return {{"degree", degree}, {"power", power}, {"m", extraFor(kind)}};
}

}  // namespace

BigInt coefficient(std::int64_t degree, std::int64_t power, Kind kind) {
  requireConstructible(degree, kind);
  const auto pre = solveIndex(degree, power, kind);
  if (!pre) return 0;
  return alternatingSign(pre->k) * cValue(pre->n, pre->k, extraFor(kind));
}

BigInt explicitCoefficient(std::int64_t degree, std::int64_t power, Kind kind) {
  requireConstructible(degree, kind);
  const auto pre = solveIndex(degree, power, kind);
  if (!pre) return 0;
  const auto [n, k] = *pre;
  const std::int64_t m = extraFor(kind);
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= n; ++i) {
    sum += alternatingSign(i) * binomial(n, i) * binomial(2 * n + m - 2 * i, n + k);
  }
  return alternatingSign(k) * sum;
}

std::vector<ChebCoefficient> polynomialCoefficients(std::int64_t degree, Kind kind) {
  requireConstructible(degree, kind);
  std::vector<ChebCoefficient> out;
  for (std::int64_t power = degree; power >= 0; power -= 2) {
    BigInt value = coefficient(degree, power, kind);
    if (value != 0) out.push_back({makeIndex(degree, power, kind), std::move(value)});
  }
  return out;
}

std::vector<std::pair<std::int64_t, BigInt>> classicalOracle(std::int64_t degree, Kind kind) {
  if (degree < 0) throw ValidationError("degree", "must be >= 0");
  // Dense coefficient vectors, index = power.
  std::vector<BigInt> prev{1};
  std::vector<BigInt> curr = kind == Kind::first ? std::vector<BigInt>{0, 1} : std::vector<BigInt>{0, 2};
  if (degree == 0) curr = prev;
  for (std::int64_t d = 2; d <= degree; ++d) {
    std::vector<BigInt> next(static_cast<std::size_t>(d + 1), 0);
    for (std::size_t i = 0; i < curr.size(); ++i) next[i + 1] += 2 * curr[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(curr);
    curr = std::move(next);
  }
  std::vector<std::pair<std::int64_t, BigInt>> out;
  for (std::int64_t power = static_cast<std::int64_t>(curr.size()) - 1; power >= 0; --power) {
    if (curr[static_cast<std::size_t>(power)] != 0) out.emplace_back(power, curr[static_cast<std::size_t>(power)]);
  }
  return out;
}

std::vector<IdentityReport> verifyTable(std::int64_t maxDegree, Kind kind) {
  std::vector<IdentityReport> reports;
  for (std::int64_t degree = lowestConstructibleDegree(kind); degree <= maxDegree; ++degree) {
    const auto classical = classicalOracle(degree, kind);
    // Walk every power so a zero/nonzero mismatch shows up too.
    for (std::int64_t power = degree; power >= 0; --power) {
      BigInt expected = 0;
      for (const auto& [p, v] : classical) {
        if (p == power) expected = v;
      }
      reports.push_back(makeEqualityReport(IdentityId::chebyshevTable, indexParams(degree, power, kind),
                                           coefficient(degree, power, kind), std::move(expected)));
    }
  }
  return reports;
}

std::vector<IdentityReport> verifyExplicit(std::int64_t maxDegree, Kind kind) {
  std::vector<IdentityReport> reports;
  for (std::int64_t degree = lowestConstructibleDegree(kind); degree <= maxDegree; ++degree) {
    for (std::int64_t power = degree; power >= 0; power -= 2) {
      reports.push_back(makeEqualityReport(IdentityId::chebyshevExplicit, indexParams(degree, power, kind),
                                           coefficient(degree, power, kind),
                                           explicitCoefficient(degree, power, kind)));
    }
  }
  return reports;
}

std::vector<IdentityReport> verifyCoefficientRecurrence(std::int64_t maxDegree, Kind kind) {
  std::vector<IdentityReport> reports;
  for (std::int64_t degree = lowestConstructibleDegree(kind) + 2; degree <= maxDegree; ++degree) {
    for (std::int64_t power = degree; power >= 0; power -= 2) {
      BigInt rhs = 2 * (power >= 1 ? coefficient(degree - 1, power - 1, kind) : BigInt(0)) -
                   coefficient(degree - 2, power, kind);
      reports.push_back(makeEqualityReport(IdentityId::chebyshevRecurrence, indexParams(degree, power, kind),
                                           coefficient(degree, power, kind), std::move(rhs)));
    }
  }
  return reports;
}

std::vector<IdentityReport> verifyCRecurrence(std::int64_t maxN, std::int64_t maxK, std::int64_t m) {
  std::vector<IdentityReport> reports;
  for (std::int64_t n = 2; n <= maxN; ++n) {
    for (std::int64_t k = 0; k <= maxK; ++k) {
      reports.push_back(makeEqualityReport(IdentityId::cRecurrence, {{"n", n}, {"k", k}, {"m", m}},
                                           cValue(n, k, m), 2 * cValue(n - 1, k, m) + cValue(n - 1, k - 1, m)));
    }
  }
  return reports;
}

}  // namespace insets::chebyshev
