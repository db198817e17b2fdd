#include "insets/identities.hpp"

#include <algorithm>
#include <set>

namespace insets::identities {

namespace {

std::vector<Parameter> profileParams(const BlockProfile& profile, std::int64_t k) {
  return {{"n", profile.blockCount()}, {"blocks", profile.mainSizes()}, {"m", profile.extraSize()}, {"k", k}};
}

void requireNonNegative(std::int64_t value, const char* field) {
  if (value < 0) throw ValidationError(field, "must be >= 0, got " + std::to_string(value));
}

void requirePositive(std::int64_t value, const char* field) {
  if (value < 1) throw ValidationError(field, "must be >= 1, got " + std::to_string(value));
}

BigInt evalOn(const InsetEvaluator& eval, std::vector<std::int64_t> sizes, std::int64_t m, std::int64_t k) {
  return eval.evaluate(BlockProfile(std::move(sizes), m), k);
}

}  // namespace

std::string_view toString(BlockDecrementVariant variant) {
  switch (variant) {
    case BlockDecrementVariant::asPrinted: return "as-printed";
    case BlockDecrementVariant::subsetCount: return "subset-count";
    case BlockDecrementVariant::subsetSum: return "subset-sum";
  }
  return "?";
}

IdentityReport verifyMReduction(const BlockProfile& profile, std::int64_t k, const InsetEvaluator& eval) {
  requireNonNegative(k, "k");
  const std::int64_t m = profile.extraSize();
  const BlockProfile bare = profile.withExtra(0);
  BigInt rhs = 0;
  for (std::int64_t i = 0; i <= std::min(m, k); ++i) {
    rhs += binomial(m, i) * eval.evaluate(bare, k - i);
  }
  return makeEqualityReport(IdentityId::mReduction, profileParams(profile, k), eval.evaluate(profile, k),
                            std::move(rhs));
}

IdentityReport verifyVandermonde(std::int64_t p, std::int64_t m, std::int64_t k) {
  requirePositive(p, "p");
  requireNonNegative(m, "m");
  requireNonNegative(k, "k");
  BigInt rhs = 0;
  for (std::int64_t i = 0; i <= std::min(m, k + 1); ++i) {
    rhs += binomial(m, i) * binomial(p, k - i + 1);
  }
  return makeEqualityReport(IdentityId::vandermonde, {{"p", p}, {"m", m}, {"k", k}}, binomial(p + m, k + 1),
                            std::move(rhs));
}

IdentityReport verifyKRecurrence(const BlockProfile& profile, std::int64_t k, std::int64_t s,
                                 const InsetEvaluator& eval) {
  requirePositive(s, "s");
  BigInt rhs = 0;
  for (std::int64_t i = 0; i <= s; ++i) {
    rhs += alternatingSign(i) * binomial(s, i) * eval.evaluate(profile.withExtra(profile.extraSize() + s - i), k + s);
  }
  auto params = profileParams(profile, k);
  params.push_back({"s", s});
  return makeEqualityReport(IdentityId::kRecurrence, std::move(params), eval.evaluate(profile, k), std::move(rhs));
}

IdentityReport verifyBinomialFromK(std::int64_t p, std::int64_t k, std::int64_t s) {
  requirePositive(p, "p");
  requireNonNegative(k, "k");
  requireNonNegative(s, "s");
  BigInt rhs = 0;
  for (std::int64_t i = 0; i <= s; ++i) {
    rhs += alternatingSign(i) * binomial(s, i) * binomial(p + s - i, k + s + 1);
  }
  return makeEqualityReport(IdentityId::kRecurrenceBinomial, {{"p", p}, {"k", k}, {"s", s}}, binomial(p, k + 1),
                            std::move(rhs));
}

IdentityReport verifyBlockRemoval(const BlockProfile& profile, std::int64_t k, std::int64_t j,
                                  const InsetEvaluator& eval) {
  if (j < 1 || j > profile.blockCount()) {
    throw ValidationError("j", "block index " + std::to_string(j) + " outside [1, " +
                                   std::to_string(profile.blockCount()) + "]");
  }
  const std::int64_t pj = profile.mainSizes()[static_cast<std::size_t>(j - 1)];
  const BlockProfile rest = profile.withoutBlock(pj);
  BigInt rhs = 0;
  for (std::int64_t i = 1; i <= pj; ++i) {
    rhs += binomial(pj, i) * eval.evaluate(rest, k - i + 1);
  }
  auto params = profileParams(profile, k);
  params.push_back({"j", j});
  return makeEqualityReport(IdentityId::blockRemoval, std::move(params), eval.evaluate(profile, k), std::move(rhs));
}

namespace {

struct Decremented {
  std::vector<std::int64_t> sizes;    // q_i, zeros included, in the original order
  std::vector<std::int64_t> members;  // I0 as 0-based indices, ascending
  std::int64_t emptied = 0;           // r
};

Decremented decrement(const BlockProfile& profile, const std::vector<std::int64_t>& blockSubset) {
  if (blockSubset.empty()) throw ValidationError("subset", "block subset must be nonempty");
  std::set<std::int64_t> seen;
  Decremented d{profile.mainSizes(), {}, 0};
  for (std::int64_t index : blockSubset) {
    if (index < 1 || index > profile.blockCount()) {
      throw ValidationError("subset", "block index " + std::to_string(index) + " outside [1, " +
                                          std::to_string(profile.blockCount()) + "]");
    }
    if (!seen.insert(index - 1).second) {
      throw ValidationError("subset", "block index " + std::to_string(index) + " repeated");
    }
  }
  d.members.assign(seen.begin(), seen.end());
  for (std::int64_t i : d.members) {
    auto& q = d.sizes[static_cast<std::size_t>(i)];
    if (q - 1 < 0) throw ValidationError("subset", "cannot decrement an empty block");
    if (--q == 0) ++d.emptied;
  }
  return d;
}

// The printed right-hand side. `outerChoose(i)` is C(n, i) or C(|I0|, i).
template <typename OuterChoose>
BigInt printedRhs(const Decremented& d, std::int64_t m, std::int64_t k, const InsetEvaluator& eval,
                  OuterChoose outerChoose) {
  // Surviving blocks in drop order: decremented blocks first, then the rest.
  std::vector<std::int64_t> order;
  for (std::int64_t i : d.members) {
    if (d.sizes[static_cast<std::size_t>(i)] > 0) order.push_back(i);
  }
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(d.sizes.size()); ++i) {
    if (!std::binary_search(d.members.begin(), d.members.end(), i)) order.push_back(i);
  }
  auto dropping = [&](std::int64_t j) {
    std::vector<std::int64_t> sizes;
    for (std::size_t t = static_cast<std::size_t>(j); t < order.size(); ++t) {
      sizes.push_back(d.sizes[static_cast<std::size_t>(order[t])]);
    }
    return sizes;
  };

  const std::int64_t subsetSize = static_cast<std::int64_t>(d.members.size());
  const std::int64_t survivors = static_cast<std::int64_t>(order.size());
  BigInt rhs = evalOn(eval, dropping(0), m, k);
  for (std::int64_t i = 1; i <= subsetSize; ++i) {
    for (std::int64_t j = 0; j <= i; ++j) {
      if (j > survivors) continue;  // fewer than zero blocks: no such set
      rhs += outerChoose(i) * binomial(i, j) * evalOn(eval, dropping(j), m, k - i + j);
    }
  }
  return rhs;
}

BigInt subsetSumRhs(const Decremented& d, std::int64_t m, std::int64_t k, const InsetEvaluator& eval) {
  const auto& members = d.members;
  const std::size_t count = members.size();
  auto isEmptied = [&](std::int64_t i) { return d.sizes[static_cast<std::size_t>(i)] == 0; };

  BigInt rhs = 0;
  for (std::uint64_t usedMask = 0; usedMask < (std::uint64_t{1} << count); ++usedMask) {
    // An emptied block outside I can only be met by its chosen element.
    bool feasible = true;
    for (std::size_t t = 0; t < count; ++t) {
      if (!(usedMask >> t & 1) && isEmptied(members[t])) feasible = false;
    }
    if (!feasible) continue;
    const auto used = static_cast<std::int64_t>(std::popcount(usedMask));

    // J ranges over submasks of I.
    for (std::uint64_t missMask = usedMask;; missMask = (missMask - 1) & usedMask) {
      bool ok = true;
      for (std::size_t t = 0; t < count; ++t) {
        if ((usedMask >> t & 1) && !(missMask >> t & 1) && isEmptied(members[t])) ok = false;
      }
      if (ok) {
        std::vector<std::int64_t> sizes;
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(d.sizes.size()); ++i) {
          auto pos = std::lower_bound(members.begin(), members.end(), i);
          bool missed = pos != members.end() && *pos == i && (missMask >> (pos - members.begin()) & 1);
          if (!missed) sizes.push_back(d.sizes[static_cast<std::size_t>(i)]);
        }
        const auto missed = static_cast<std::int64_t>(std::popcount(missMask));
        rhs += evalOn(eval, std::move(sizes), m, k - used + missed);
      }
      if (missMask == 0) break;
    }
  }
  return rhs;
}

}  // namespace

IdentityReport verifyBlockDecrement(const BlockProfile& profile, std::int64_t k,
                                    const std::vector<std::int64_t>& blockSubset, BlockDecrementVariant variant,
                                    const InsetEvaluator& eval) {
  const Decremented d = decrement(profile, blockSubset);
  const std::int64_t n = profile.blockCount();
  const auto subsetSize = static_cast<std::int64_t>(d.members.size());

  BigInt rhs;
  switch (variant) {
    case BlockDecrementVariant::asPrinted:
      rhs = printedRhs(d, profile.extraSize(), k, eval, [n](std::int64_t i) { return binomial(n, i); });
      break;
    case BlockDecrementVariant::subsetCount:
      rhs = printedRhs(d, profile.extraSize(), k, eval,
                       [subsetSize](std::int64_t i) { return binomial(subsetSize, i); });
      break;
    case BlockDecrementVariant::subsetSum:
      rhs = subsetSumRhs(d, profile.extraSize(), k, eval);
      break;
  }

  std::vector<std::int64_t> oneBased;
  for (std::int64_t i : d.members) oneBased.push_back(i + 1);
  auto params = profileParams(profile, k);
  params.push_back({"subset", std::move(oneBased)});
  params.push_back({"r", d.emptied});
  return makeEqualityReport(IdentityId::blockDecrement, std::move(params), eval.evaluate(profile, k),
                            std::move(rhs));
}

IdentityReport verifyPrimeDivisibility(std::int64_t q, std::int64_t r, std::int64_t m) {
  if (!isPrime(q)) throw ValidationError("q", std::to_string(q) + " is not prime");
  if (r <= 1) throw ValidationError("r", "must be > 1, got " + std::to_string(r));
  requireNonNegative(m, "m");
  BigInt value = power(r, q) - binomial(r * q + m, q) + binomial(m, q);
  IdentityReport report{IdentityId::primeDivisibility, {{"q", q}, {"r", r}, {"m", m}}, std::move(value), q, false};
  report.pass = divides(report.rhs, report.lhs);
  return report;
}

IdentityReport verifyPowerExpansion(std::int64_t n, std::int64_t p, std::int64_t m) {
  requirePositive(n, "n");
  requirePositive(p, "p");
  requireNonNegative(m, "m");
  BigInt rhs = 0;
  for (std::int64_t i = 0; i <= n; ++i) {
    rhs += alternatingSign(i) * binomial(n, i) * binomial(p * n + m - p * i, n);
  }
  return makeEqualityReport(IdentityId::powerExpansion, {{"n", n}, {"p", p}, {"m", m}}, power(p, n), std::move(rhs));
}

}  // namespace insets::identities
