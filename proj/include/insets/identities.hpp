#pragma once

// Exact verifiers for the identities and recurrences satisfied by F. Each
// returns an IdentityReport carrying both sides so failures are inspectable.

#include <cstdint>
#include <vector>

#include "insets/evaluator.hpp"
#include "insets/profile.hpp"
#include "insets/report.hpp"

namespace insets::identities {

/// Reduces an arbitrary extra block to m = 0. Requires k >= 0.
IdentityReport verifyMReduction(const BlockProfile& profile, std::int64_t k,
                                const InsetEvaluator& eval = defaultEvaluator());

/// C(p+m, k+1) against the convolution, summed over every nonzero term.
IdentityReport verifyVandermonde(std::int64_t p, std::int64_t m, std::int64_t k);

/// s-step recurrence in k. The s = 1 case is F(n,k,P,m) = F(n,k+1,P,m+1) - F(n,k+1,P,m).
IdentityReport verifyKRecurrence(const BlockProfile& profile, std::int64_t k, std::int64_t s,
                                 const InsetEvaluator& eval = defaultEvaluator());

/// Binomial instance of the k-recurrence (one block of size p, m = 0).
IdentityReport verifyBinomialFromK(std::int64_t p, std::int64_t k, std::int64_t s);

/// Removes block j (1-based, in the profile's given order).
IdentityReport verifyBlockRemoval(const BlockProfile& profile, std::int64_t k, std::int64_t j,
                                  const InsetEvaluator& eval = defaultEvaluator());

/// Right-hand sides tried for the block-decrement formula.
///
/// asPrinted: F(n-r,k,Q,m) + sum_{i=1}^{|I0|} sum_{j=0}^{i} C(n,i) C(i,j) F(n-r-j, k-i+j, Q, m).
///   Q has the r emptied blocks removed; the j further blocks dropped from Q are
///   taken from I0 first, then from the remaining blocks, lowest index first.
/// subsetCount: as printed with C(|I0|, i) in place of C(n, i).
/// subsetSum: the exact decomposition over I subset I0 (which chosen elements are
///   used) and J subset I (which of those blocks the rest of the subset misses):
///   sum_I sum_J F(n-|J|, k-|I|+|J|, Q minus J, m), with terms that would need
///   to meet an emptied block dropped.
enum class BlockDecrementVariant { asPrinted, subsetCount, subsetSum };

std::string_view toString(BlockDecrementVariant variant);

/// Decrements each block listed in blockSubset (1-based indices, nonempty,
/// distinct) by one. lhs is always F(n,k,P,m); rhs depends on the variant.
IdentityReport verifyBlockDecrement(const BlockProfile& profile, std::int64_t k,
                                    const std::vector<std::int64_t>& blockSubset,
                                    BlockDecrementVariant variant = BlockDecrementVariant::asPrinted,
                                    const InsetEvaluator& eval = defaultEvaluator());

/// q | r^q - C(rq+m, q) + C(m, q). lhs is the expression, rhs is q.
IdentityReport verifyPrimeDivisibility(std::int64_t q, std::int64_t r, std::int64_t m);

/// p^n against sum_i (-1)^i C(n,i) C(pn+m-pi, n).
IdentityReport verifyPowerExpansion(std::int64_t n, std::int64_t p, std::int64_t m);

}  // namespace insets::identities
