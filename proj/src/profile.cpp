#include "insets/profile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace insets {

BlockProfile::BlockProfile(std::vector<std::int64_t> mainSizes, std::int64_t extraSize)
    : main_(std::move(mainSizes)), extra_(extraSize) {
  for (std::size_t i = 0; i < main_.size(); ++i) {
    if (main_[i] < 1) {
      throw ValidationError("blocks", "main block " + std::to_string(i + 1) +
                                          " has size " + std::to_string(main_[i]) +
                                          "; sizes must be >= 1");
    }
  }
  if (extra_ < 0) {
    throw ValidationError("extra", "extra block size must be >= 0, got " + std::to_string(extra_));
  }
}

BlockProfile BlockProfile::equal(std::int64_t n, std::int64_t p, std::int64_t extraSize) {
  if (n < 0) throw ValidationError("n", "block count must be >= 0");
  return BlockProfile(std::vector<std::int64_t>(static_cast<std::size_t>(n), p), extraSize);
}

std::int64_t BlockProfile::total() const noexcept {
  return std::accumulate(main_.begin(), main_.end(), extra_);
}

BlockProfile BlockProfile::canonical() const {
  BlockProfile out = *this;
  std::sort(out.main_.begin(), out.main_.end());
  return out;
}

BlockProfile BlockProfile::withExtra(std::int64_t extraSize) const {
  return BlockProfile(main_, extraSize);
}

BlockProfile BlockProfile::withoutBlock(std::int64_t size) const {
  BlockProfile out = canonical();
  auto it = std::find(out.main_.begin(), out.main_.end(), size);
  if (it == out.main_.end()) {
    throw ValidationError("blocks", "no block of size " + std::to_string(size));
  }
  out.main_.erase(it);
  return out;
}

bool BlockProfile::allEqual() const noexcept {
  return std::adjacent_find(main_.begin(), main_.end(), std::not_equal_to<>()) == main_.end();
}

std::string describe(const BlockProfile& profile) {
  std::ostringstream os;
  os << "P={";
  for (std::size_t i = 0; i < profile.mainSizes().size(); ++i) {
    if (i) os << ',';
    os << profile.mainSizes()[i];
  }
  os << "} m=" << profile.extraSize();
  return os.str();
}

}  // namespace insets
