#include <doctest.h>

#include "insets/chebyshev.hpp"
#include "insets/oracle.hpp"
#include "insets/profile.hpp"

using namespace insets;
using namespace insets::chebyshev;

namespace {

using Table = std::vector<std::pair<std::int64_t, BigInt>>;

Table flatten(const std::vector<ChebCoefficient>& coeffs) {
  Table out;
  for (const auto& c : coeffs) out.emplace_back(c.index.power, c.value);
  return out;
}

Table table(std::initializer_list<std::pair<std::int64_t, long>> entries) {
  Table out;
  for (auto [s, v] : entries) out.emplace_back(s, BigInt(v));
  return out;
}

bool allPass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return !reports.empty();
}

}  // namespace

TEST_CASE("c values") {
  CHECK(cValue(3, 1, 0) == 12);
  CHECK(cValue(3, 1, 0) == oracle::bruteForce(BlockProfile::equal(3, 2, 0), 1));
  CHECK(cValue(1, 0, 0) == 2);
  CHECK(cValue(2, -1, 0) == 0);
  CHECK_THROWS_AS(cValue(2, 0, 2), ValidationError);
  CHECK_THROWS_AS(cValue(0, 0, 0), ValidationError);
}

TEST_CASE("solving for the block preimage") {
  CHECK(solveIndex(4, 2, Kind::second) == Preimage{3, 1});
  CHECK(solveIndex(3, 1, Kind::first) == Preimage{1, 1});
  CHECK_FALSE(solveIndex(4, 3, Kind::second));
  CHECK_FALSE(solveIndex(4, 3, Kind::first));
  CHECK_FALSE(solveIndex(2, 4, Kind::second));
  CHECK_FALSE(solveIndex(0, 0, Kind::second));

  auto idx = makeIndex(5, 1, Kind::first);
  CHECK(idx.preimage == Preimage{2, 2});
}

TEST_CASE("coefficient examples") {
  // U_2 = 4x^2 - 1; its leading coefficient is c(2,0,0).
  CHECK(coefficient(2, 2, Kind::second) == 4);
  CHECK(solveIndex(2, 2, Kind::second) == Preimage{2, 0});
  CHECK(coefficient(2, 0, Kind::second) == -1);
  CHECK(coefficient(3, 1, Kind::first) == -3);
  CHECK(coefficient(4, 2, Kind::second) == -12);
  CHECK(coefficient(4, 3, Kind::second) == 0);
  CHECK(coefficient(4, 6, Kind::second) == 0);
}

TEST_CASE("full polynomials") {
  CHECK(flatten(polynomialCoefficients(3, Kind::first)) == table({{3, 4}, {1, -3}}));
  CHECK(flatten(polynomialCoefficients(2, Kind::second)) == table({{2, 4}, {0, -1}}));
  CHECK(flatten(polynomialCoefficients(5, Kind::second)) == table({{5, 32}, {3, -32}, {1, 6}}));
}

TEST_CASE("classical recurrence") {
  CHECK(classicalOracle(0, Kind::first) == table({{0, 1}}));
  CHECK(classicalOracle(0, Kind::second) == table({{0, 1}}));
  CHECK(classicalOracle(1, Kind::second) == table({{1, 2}}));
  CHECK(classicalOracle(1, Kind::first) == table({{1, 1}}));
  CHECK(classicalOracle(2, Kind::first) == table({{2, 2}, {0, -1}}));
  CHECK(classicalOracle(4, Kind::second) == table({{4, 16}, {2, -12}, {0, 1}}));
  CHECK(classicalOracle(5, Kind::first) == table({{5, 16}, {3, -20}, {1, 5}}));
}

TEST_CASE("only T_0, T_1, T_2 and U_0 are refused") {
  for (std::int64_t r : {0, 1, 2}) {
    CHECK_THROWS_AS(coefficient(r, r, Kind::first), NotConstructible);
    CHECK_THROWS_AS(polynomialCoefficients(r, Kind::first), NotConstructible);
  }
  CHECK_THROWS_AS(coefficient(0, 0, Kind::second), NotConstructible);
  CHECK_THROWS_AS(explicitCoefficient(0, 0, Kind::second), NotConstructible);
  for (std::int64_t r = 1; r <= 20; ++r) CHECK_NOTHROW(polynomialCoefficients(r, Kind::second));
  for (std::int64_t r = 3; r <= 20; ++r) CHECK_NOTHROW(polynomialCoefficients(r, Kind::first));
}

TEST_CASE("combinatorial tables equal the classical ones") {
  for (std::int64_t r = 1; r <= 16; ++r) {
    CHECK(flatten(polynomialCoefficients(r, Kind::second)) == classicalOracle(r, Kind::second));
  }
  for (std::int64_t r = 3; r <= 16; ++r) {
    CHECK(flatten(polynomialCoefficients(r, Kind::first)) == classicalOracle(r, Kind::first));
  }
  CHECK(allPass(verifyTable(16, Kind::first)));
  CHECK(allPass(verifyTable(16, Kind::second)));
}

TEST_CASE("explicit sum, coefficient recurrence and c-recurrence") {
  for (auto kind : {Kind::first, Kind::second}) {
    CHECK(allPass(verifyExplicit(12, kind)));
    CHECK(allPass(verifyCoefficientRecurrence(12, kind)));
    CHECK(allPass(verifyCRecurrence(10, 10, extraFor(kind))));
  }
}

TEST_CASE("kind names") {
  CHECK((parseKind("first") == Kind::first));
  CHECK((parseKind("second") == Kind::second));
  CHECK((parseKind("U") == Kind::second));
  CHECK((toString(Kind::first) == "first"));
  CHECK_THROWS_AS(parseKind("third"), ValidationError);
}
