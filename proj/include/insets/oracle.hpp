#pragma once

// Brute-force ground truth. Nothing here calls the evaluator.

#include <cstdint>
#include <vector>

#include "insets/exactmath.hpp"
#include "insets/profile.hpp"

namespace insets::oracle {

struct Label {
  std::int64_t block;     ///< 0..n-1 for main blocks, n for the extra block
  std::int64_t position;  ///< index within the block

  friend bool operator==(const Label&, const Label&) = default;
};

/// Concrete universe for a profile. Labels are laid out block by block, main
/// blocks first in the profile's order, then the extra block.
struct ExplicitBlockSet {
  std::vector<Label> elements;
  std::int64_t mainBlocks = 0;

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(elements.size()); }
  std::int64_t blockOf(std::int64_t element) const { return elements.at(static_cast<std::size_t>(element)).block; }
  std::int64_t blockSize(std::int64_t block) const;
};

ExplicitBlockSet buildSet(const BlockProfile& profile);

/// size-subsets meeting every main block. size must lie in [0, N].
BigInt countInsets(const ExplicitBlockSet& set, std::int64_t size);

/// size-subsets whose complement contains no main block entirely.
BigInt countByComplement(const ExplicitBlockSet& set, std::int64_t size);

/// Number of subsets of any size that miss at least one main block, by a
/// sweep over all 2^N subsets. Intended for N <= 20.
BigInt countNonInsets(const ExplicitBlockSet& set);

/// F(n, k, P, m) by enumeration; 0 when n+k is outside [0, N].
BigInt bruteForce(const BlockProfile& profile, std::int64_t k);

}  // namespace insets::oracle
