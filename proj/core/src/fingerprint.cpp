#include "morpheval/fingerprint.hpp"

#include "morpheval/errors.hpp"

namespace morpheval {

std::string_view StrategyName(CharacteristicStrategy strategy) {
  switch (strategy) {
    case CharacteristicStrategy::kInventoryPrefixes: return "inventory-prefixes";
    case CharacteristicStrategy::kInventorySuffixes: return "inventory-suffixes";
    case CharacteristicStrategy::kAllWordInitial: return "all-word-initial";
    case CharacteristicStrategy::kAllContinuation: return "all-continuation";
  }
  return "inventory-prefixes";
}

CharacteristicStrategy ParseStrategy(std::string_view name) {
  for (auto s : {CharacteristicStrategy::kInventoryPrefixes,
                 CharacteristicStrategy::kInventorySuffixes,
                 CharacteristicStrategy::kAllWordInitial,
                 CharacteristicStrategy::kAllContinuation}) {
    if (StrategyName(s) == name) return s;
  }
  throw Error(ErrorCode::kInvalidConfig,
              "unknown strategy '" + std::string(name) + "'");
}

std::set<std::string> ExtractCharacteristicSet(
    const Vocabulary& vocab, const MorphemeInventory& inventory,
    CharacteristicStrategy strategy) {
  std::set<std::string> out;
  switch (strategy) {
    case CharacteristicStrategy::kInventoryPrefixes:
      for (const std::string& p : inventory.Section(MorphemeType::kPrefix)) {
        if (vocab.Contains(p)) out.insert(p);
      }
      break;
    case CharacteristicStrategy::kInventorySuffixes:
      for (const std::string& s : inventory.Section(MorphemeType::kSuffix)) {
        if (vocab.Contains(vocab.Marked(s))) out.insert(s);
      }
      break;
    case CharacteristicStrategy::kAllWordInitial:
      for (const std::string& t : vocab.tokens()) {
        if (!vocab.IsContinuation(t)) out.insert(t);
      }
      break;
    case CharacteristicStrategy::kAllContinuation:
      for (const std::string& t : vocab.tokens()) {
        if (vocab.IsContinuation(t)) out.insert(t);
      }
      break;
  }
  return out;
}

SimilarityReport CompareTokenSets(const std::set<std::string>& a,
                                  const std::set<std::string>& b) {
  if (a.empty() && b.empty()) {
    throw Error(ErrorCode::kEmptyComparison, "both token sets are empty");
  }
  SimilarityReport report;
  report.set_a_size = a.size();
  report.set_b_size = b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++report.intersection_size;
      ++ia;
      ++ib;
    }
  }
  return report;
}

}  // namespace morpheval
