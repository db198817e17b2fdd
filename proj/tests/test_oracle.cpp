#include <doctest.h>

#include "insets/oracle.hpp"

using namespace insets;
using namespace insets::oracle;

TEST_CASE("buildSet lays out blocks deterministically") {
  auto set = buildSet(BlockProfile({2, 3}, 2));
  CHECK(set.size() == 7);
  CHECK(set.mainBlocks == 2);
  CHECK(set.blockSize(0) == 2);
  CHECK(set.blockSize(1) == 3);
  CHECK(set.blockSize(2) == 2);
  CHECK(set.elements[2] == Label{1, 0});
  CHECK(set.elements[6] == Label{2, 1});

  CHECK(buildSet(BlockProfile({1}, 0)).size() == 1);
  auto extraOnly = buildSet(BlockProfile({}, 4));
  CHECK(extraOnly.size() == 4);
  CHECK(extraOnly.blockSize(0) == 4);
}

TEST_CASE("countInsets examples") {
  auto set = buildSet(BlockProfile({2, 3}, 2));
  // C(7,3) - C(5,3) - C(4,3) + C(2,3)
  CHECK(countInsets(set, 3) == 35 - 10 - 4 + 0);
  CHECK(countInsets(buildSet(BlockProfile({1, 1}, 0)), 2) == 1);
  CHECK(countInsets(set, 0) == 0);
  CHECK(countInsets(buildSet(BlockProfile({}, 3)), 0) == 1);
}

TEST_CASE("countByComplement examples") {
  CHECK(countByComplement(buildSet(BlockProfile({2, 3}, 2)), 3) == 21);
  CHECK(countByComplement(buildSet(BlockProfile({1}, 1)), 1) == 1);
  CHECK(countByComplement(buildSet(BlockProfile({}, 3)), 2) == 3);
}

TEST_CASE("size out of range is rejected") {
  auto set = buildSet(BlockProfile({2}, 1));
  CHECK_THROWS_AS(countInsets(set, -1), ValidationError);
  CHECK_THROWS_AS(countInsets(set, 4), ValidationError);
  CHECK_THROWS_AS(countByComplement(set, 4), ValidationError);
  CHECK(bruteForce(BlockProfile({2}, 1), 5) == 0);
  CHECK(bruteForce(BlockProfile({2}, 1), -2) == 0);
}

TEST_CASE("both definitions agree and partition the power set") {
  const std::vector<std::vector<std::int64_t>> shapes{{}, {1}, {3}, {1, 1}, {2, 3}, {1, 2, 3}, {4, 4}, {2, 2, 2, 2}, {5, 1, 3}};
  for (const auto& sizes : shapes) {
    for (std::int64_t m = 0; m <= 4; ++m) {
      BlockProfile p(sizes, m);
      if (p.total() > 14) continue;
      auto set = buildSet(p);
      BigInt insetsTotal = 0;
      for (std::int64_t size = 0; size <= set.size(); ++size) {
        const BigInt direct = countInsets(set, size);
        REQUIRE(direct == countByComplement(set, size));
        insetsTotal += direct;
      }
      if (p.total() <= 12) CHECK(insetsTotal + countNonInsets(set) == power(2, p.total()));
    }
  }
}
