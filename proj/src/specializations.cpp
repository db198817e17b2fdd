#include "insets/specializations.hpp"

#include "insets/evaluator.hpp"

namespace insets {

SpecializationKind parseSpecializationKind(std::string_view name) {
  if (name == "power") return SpecializationKind::power;
  if (name == "factorial") return SpecializationKind::factorial;
  if (name == "rising") return SpecializationKind::rising;
  if (name == "falling") return SpecializationKind::falling;
  if (name == "binomial") return SpecializationKind::binomial;
  throw ValidationError("kind", "unknown sequence kind '" + std::string(name) +
                                    "' (expected power, factorial, rising, falling or binomial)");
}

std::string_view toString(SpecializationKind kind) {
  switch (kind) {
    case SpecializationKind::power: return "power";
    case SpecializationKind::factorial: return "factorial";
    case SpecializationKind::rising: return "rising";
    case SpecializationKind::falling: return "falling";
    case SpecializationKind::binomial: return "binomial";
  }
  return "?";
}

std::int64_t defaultFirstIndex(SpecializationKind kind) {
  switch (kind) {
    case SpecializationKind::power:
    case SpecializationKind::binomial: return 0;
    default: return 1;
  }
}

BlockProfile specializationProfile(SpecializationKind kind, const CatalogParams& params, std::int64_t index) {
  if (index < 0) throw ValidationError("first", "sequence index must be >= 0");
  std::vector<std::int64_t> sizes;
  switch (kind) {
    case SpecializationKind::power:
      if (params.p < 1) throw ValidationError("p", "block size must be >= 1");
      return BlockProfile::equal(index, params.p, 0);
    case SpecializationKind::factorial:
      for (std::int64_t i = 1; i <= index; ++i) sizes.push_back(i);
      return BlockProfile(std::move(sizes), 0);
    case SpecializationKind::rising:
      if (params.s < 0) throw ValidationError("s", "rising factorial shift must be >= 0");
      for (std::int64_t i = 1; i <= index; ++i) sizes.push_back(params.s + i);
      return BlockProfile(std::move(sizes), 0);
    case SpecializationKind::falling:
      if (params.s < 1) throw ValidationError("s", "falling factorial shift must be >= 1");
      for (std::int64_t i = 1; i <= index; ++i) sizes.push_back(index + params.s - i);
      return BlockProfile(std::move(sizes), 0);
    case SpecializationKind::binomial:
      if (params.m < 0) throw ValidationError("m", "extra block size must be >= 0");
      // One singleton block: F(1, k, {1}, m) = C(m, k).
      return BlockProfile({1}, params.m);
  }
  throw ValidationError("kind", "unhandled kind");
}

std::vector<BigInt> specializationCatalog(SpecializationKind kind, const CatalogParams& params) {
  if (params.count < 0) throw ValidationError("count", "count must be >= 0");
  std::vector<BigInt> terms;
  terms.reserve(static_cast<std::size_t>(params.count));
  for (std::int64_t i = params.first; i < params.first + params.count; ++i) {
    const std::int64_t k = kind == SpecializationKind::binomial ? i : 0;
    terms.push_back(defaultEvaluator().evaluate(specializationProfile(kind, params, i), k));
  }
  return terms;
}

}  // namespace insets
