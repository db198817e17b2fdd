#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace insets {

/// Rejected user input. field() names the offending parameter.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Sizes of the main blocks plus the size of the unconstrained extra block.
///
/// Every main block has at least one element; the extra block may be empty.
/// Values of F depend only on the multiset of main sizes, so canonical()
/// (sizes sorted ascending) is the form used for caching and comparison.
class BlockProfile {
 public:
  BlockProfile() = default;
  BlockProfile(std::vector<std::int64_t> mainSizes, std::int64_t extraSize);

  /// n copies of size p.
  static BlockProfile equal(std::int64_t n, std::int64_t p, std::int64_t extraSize);

  const std::vector<std::int64_t>& mainSizes() const noexcept { return main_; }
  std::int64_t extraSize() const noexcept { return extra_; }
  std::int64_t blockCount() const noexcept { return static_cast<std::int64_t>(main_.size()); }

  /// N = sum of main sizes + extra size.
  std::int64_t total() const noexcept;

  BlockProfile canonical() const;
  BlockProfile withExtra(std::int64_t extraSize) const;

  /// Drops one block equal to `size`, the first one in canonical order.
  BlockProfile withoutBlock(std::int64_t size) const;

  bool allEqual() const noexcept;

  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;

 private:
  std::vector<std::int64_t> main_;
  std::int64_t extra_ = 0;
};

/// A request for F(n, k, P, m); k may be negative.
struct InsetQuery {
  BlockProfile profile;
  std::int64_t k = 0;

  std::int64_t n() const noexcept { return profile.blockCount(); }
  std::int64_t total() const noexcept { return profile.total(); }
  /// Size of the subsets being counted, n + k.
  std::int64_t subsetSize() const noexcept { return n() + k; }
};

std::string describe(const BlockProfile& profile);

}  // namespace insets
