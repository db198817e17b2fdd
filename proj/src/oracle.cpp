#include "insets/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace insets::oracle {

namespace {

void checkSize(const ExplicitBlockSet& set, std::int64_t size) {
  if (size < 0 || size > set.size()) {
    throw ValidationError("size", "subset size " + std::to_string(size) + " outside [0, " +
                                      std::to_string(set.size()) + "]");
  }
}

// Calls visit(indices) for every size-combination of 0..total-1 in
// lexicographic order.
template <typename Visit>
void forEachCombination(std::int64_t total, std::int64_t size, Visit&& visit) {
  std::vector<std::int64_t> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::int64_t i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - size + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < size; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

std::int64_t ExplicitBlockSet::blockSize(std::int64_t block) const {
  return std::count_if(elements.begin(), elements.end(), [block](const Label& l) { return l.block == block; });
}

ExplicitBlockSet buildSet(const BlockProfile& profile) {
  ExplicitBlockSet set;
  set.mainBlocks = profile.blockCount();
  const auto& sizes = profile.mainSizes();
  for (std::int64_t b = 0; b < set.mainBlocks; ++b) {
    for (std::int64_t pos = 0; pos < sizes[static_cast<std::size_t>(b)]; ++pos) {
      set.elements.push_back({b, pos});
    }
  }
  for (std::int64_t pos = 0; pos < profile.extraSize(); ++pos) {
    set.elements.push_back({set.mainBlocks, pos});
  }
  return set;
}

BigInt countInsets(const ExplicitBlockSet& set, std::int64_t size) {
  checkSize(set, size);
  std::uint64_t count = 0;
  std::vector<char> hit(static_cast<std::size_t>(set.mainBlocks));
  forEachCombination(set.size(), size, [&](const std::vector<std::int64_t>& idx) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::int64_t e : idx) {
      std::int64_t b = set.blockOf(e);
      if (b < set.mainBlocks) hit[static_cast<std::size_t>(b)] = 1;
    }
    if (std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; })) ++count;
  });
  return count;
}

BigInt countByComplement(const ExplicitBlockSet& set, std::int64_t size) {
  checkSize(set, size);
  std::vector<std::int64_t> blockSizes(static_cast<std::size_t>(set.mainBlocks));
  for (std::int64_t b = 0; b < set.mainBlocks; ++b) blockSizes[static_cast<std::size_t>(b)] = set.blockSize(b);

  std::uint64_t count = 0;
  std::vector<char> inU(static_cast<std::size_t>(set.size()));
  std::vector<std::int64_t> leftOut(static_cast<std::size_t>(set.mainBlocks));
  forEachCombination(set.size(), size, [&](const std::vector<std::int64_t>& idx) {
    std::fill(inU.begin(), inU.end(), 0);
    for (std::int64_t e : idx) inU[static_cast<std::size_t>(e)] = 1;
    std::fill(leftOut.begin(), leftOut.end(), 0);
    for (std::int64_t e = 0; e < set.size(); ++e) {
      std::int64_t b = set.blockOf(e);
      if (!inU[static_cast<std::size_t>(e)] && b < set.mainBlocks) ++leftOut[static_cast<std::size_t>(b)];
    }
    bool containsBlock = false;
    for (std::int64_t b = 0; b < set.mainBlocks; ++b) {
      if (leftOut[static_cast<std::size_t>(b)] == blockSizes[static_cast<std::size_t>(b)]) containsBlock = true;
    }
    if (!containsBlock) ++count;
  });
  return count;
}

BigInt countNonInsets(const ExplicitBlockSet& set) {
  if (set.size() > 30) throw ValidationError("size", "universe too large for a full sweep");
  std::vector<std::uint32_t> blockMask(static_cast<std::size_t>(set.mainBlocks), 0);
  for (std::int64_t e = 0; e < set.size(); ++e) {
    std::int64_t b = set.blockOf(e);
    if (b < set.mainBlocks) blockMask[static_cast<std::size_t>(b)] |= (1u << e);
  }
  std::uint64_t failing = 0;
  const std::uint64_t limit = std::uint64_t{1} << set.size();
  for (std::uint64_t subset = 0; subset < limit; ++subset) {
    for (std::uint32_t mask : blockMask) {
      if ((subset & mask) == 0) {
        ++failing;
        break;
      }
    }
  }
  return failing;
}

BigInt bruteForce(const BlockProfile& profile, std::int64_t k) {
  const std::int64_t size = profile.blockCount() + k;
  if (size < 0 || size > profile.total()) return 0;
  return countInsets(buildSet(profile), size);
}

}  // namespace insets::oracle
