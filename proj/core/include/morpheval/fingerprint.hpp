#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "morpheval/morphology.hpp"
#include "morpheval/percent.hpp"
#include "morpheval/vocabulary.hpp"

namespace morpheval {

enum class CharacteristicStrategy {
  kInventoryPrefixes,  // inventory prefixes present as bare tokens
  kInventorySuffixes,  // inventory suffixes present as marked tokens
  kAllWordInitial,     // every token without the marker
  kAllContinuation,    // every token with the marker
};

std::string_view StrategyName(CharacteristicStrategy strategy);
CharacteristicStrategy ParseStrategy(std::string_view name);

// Inventory strategies return morpheme strings; the others return vocabulary
// tokens verbatim. Throws Error(kMissingInventory) when an inventory strategy
// is used without the needed section.
std::set<std::string> ExtractCharacteristicSet(
    const Vocabulary& vocab, const MorphemeInventory& inventory,
    CharacteristicStrategy strategy);

struct SimilarityReport {
  std::uint64_t set_a_size = 0;
  std::uint64_t set_b_size = 0;
  std::uint64_t intersection_size = 0;

  Fixed2 precision() const { return RoundedPercent(intersection_size, set_a_size); }
  Fixed2 recall() const { return RoundedPercent(intersection_size, set_b_size); }
  Fixed2 f1() const {
    return RoundedPercent(2 * intersection_size, set_a_size + set_b_size);
  }
};

// Throws Error(kEmptyComparison) when both sets are empty.
SimilarityReport CompareTokenSets(const std::set<std::string>& a,
                                  const std::set<std::string>& b);

}  // namespace morpheval
