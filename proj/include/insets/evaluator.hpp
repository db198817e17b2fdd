#pragma once

// Exact evaluation of F(n, k, P, m), the number of (n+k)-subsets of a blocked
// set that meet every main block.

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "insets/exactmath.hpp"
#include "insets/profile.hpp"

namespace insets {

/// Inclusion-exclusion over subsets of main blocks. Subsets are grouped by the
/// multiset of sizes they select, so a profile with d distinct sizes of
/// multiplicities c_1..c_d costs prod(c_j + 1) terms instead of 2^n.
/// Returns 0 for k < 0.
BigInt evaluate(const InsetQuery& query);

/// Equal-block form: sum_i (-1)^i C(n,i) C(np + m - ip, n + k).
BigInt evaluateEqualBlocks(std::int64_t n, std::int64_t p, std::int64_t m, std::int64_t k);

/// F(n, 0, P, m), the product of the main sizes.
BigInt evaluateProduct(const BlockProfile& profile);

/// Memoizing front end for evaluate(). Keyed on the canonical profile, so any
/// permutation of the main sizes hits the same entry. Safe to share between
/// threads; entries are inserted whole under a lock.
class InsetEvaluator {
 public:
  BigInt evaluate(const InsetQuery& query) const;
  BigInt evaluate(const BlockProfile& profile, std::int64_t k) const {
    return evaluate(InsetQuery{profile, k});
  }

  std::size_t cacheSize() const;
  void clear();

 private:
  using Key = std::tuple<std::vector<std::int64_t>, std::int64_t, std::int64_t>;
  mutable std::mutex mutex_;
  mutable std::map<Key, BigInt> cache_;
};

/// Process-wide evaluator used when callers don't bring their own.
const InsetEvaluator& defaultEvaluator();

}  // namespace insets
