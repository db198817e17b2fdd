#include "insets/evaluator.hpp"

#include <utility>

namespace insets {

namespace {

// (size, multiplicity) pairs of a sorted size list.
std::vector<std::pair<std::int64_t, std::int64_t>> groupSizes(const std::vector<std::int64_t>& sorted) {
  std::vector<std::pair<std::int64_t, std::int64_t>> groups;
  for (std::int64_t size : sorted) {
    if (!groups.empty() && groups.back().first == size) {
      ++groups.back().second;
    } else {
      groups.emplace_back(size, 1);
    }
  }
  return groups;
}

}  // namespace

BigInt evaluate(const InsetQuery& query) {
  if (query.k < 0) return 0;
  const std::int64_t target = query.subsetSize();
  const std::int64_t total = query.total();
  if (target > total) return 0;

  const auto groups = groupSizes(query.profile.canonical().mainSizes());

  // Mixed-radix counter: chosen[j] blocks of size groups[j].first are excluded.
  std::vector<std::int64_t> chosen(groups.size(), 0);
  BigInt sum = 0;
  while (true) {
    std::int64_t removed = 0;
    std::int64_t picked = 0;
    BigInt weight = 1;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      removed += chosen[j] * groups[j].first;
      picked += chosen[j];
      weight *= binomial(groups[j].second, chosen[j]);
    }
    BigInt term = weight * binomial(total - removed, target);
    if (picked % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }

    std::size_t j = 0;
    while (j < groups.size() && chosen[j] == groups[j].second) {
      chosen[j] = 0;
      ++j;
    }
    if (j == groups.size()) break;
    ++chosen[j];
  }
  return sum;
}

BigInt evaluateEqualBlocks(std::int64_t n, std::int64_t p, std::int64_t m, std::int64_t k) {
  if (n < 0) throw ValidationError("n", "block count must be >= 0");
  if (p < 1) throw ValidationError("p", "block size must be >= 1");
  if (m < 0) throw ValidationError("m", "extra block size must be >= 0");
  if (k < 0) return 0;
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= n; ++i) {
    BigInt term = binomial(n, i) * binomial(n * p + m - i * p, n + k);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt evaluateProduct(const BlockProfile& profile) {
  BigInt product = 1;
  for (std::int64_t size : profile.mainSizes()) product *= size;
  return product;
}

BigInt InsetEvaluator::evaluate(const InsetQuery& query) const {
  if (query.k < 0) return 0;
  BlockProfile canon = query.profile.canonical();
  Key key{canon.mainSizes(), canon.extraSize(), query.k};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  BigInt value = insets::evaluate(InsetQuery{std::move(canon), query.k});
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

std::size_t InsetEvaluator::cacheSize() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

void InsetEvaluator::clear() {
  std::lock_guard lock(mutex_);
  cache_.clear();
}

const InsetEvaluator& defaultEvaluator() {
  static const InsetEvaluator instance;
  return instance;
}

}  // namespace insets
