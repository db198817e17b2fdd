#pragma once

// Classical sequences realized as values of F: powers, factorials, rising and
// falling factorials, binomial rows. Every value is produced by evaluate(), not
// by the closed form it is supposed to match.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "insets/exactmath.hpp"
#include "insets/profile.hpp"

namespace insets {

enum class SpecializationKind { power, factorial, rising, falling, binomial };

SpecializationKind parseSpecializationKind(std::string_view name);
std::string_view toString(SpecializationKind kind);

struct CatalogParams {
  std::int64_t p = 2;  ///< block size (power)
  std::int64_t s = 0;  ///< shift (rising: s >= 0, falling: s >= 1)
  std::int64_t m = 0;  ///< extra block (binomial row; ignored elsewhere)
  std::int64_t first = 0;
  std::int64_t count = 0;
};

/// Profile whose F(n, 0, ., .) is the index-th term (k for binomial).
BlockProfile specializationProfile(SpecializationKind kind, const CatalogParams& params, std::int64_t index);

/// Terms first, first+1, ..., first+count-1.
std::vector<BigInt> specializationCatalog(SpecializationKind kind, const CatalogParams& params);

/// Index of the first term conventionally emitted for the kind
/// (0 for power and binomial, 1 for the factorial family).
std::int64_t defaultFirstIndex(SpecializationKind kind);

}  // namespace insets
