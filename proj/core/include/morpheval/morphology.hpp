#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morpheval/unicode.hpp"

namespace morpheval {

enum class MorphemeType { kPrefix, kSuffix, kStem, kClitic };

inline constexpr std::array<MorphemeType, 4> kAllMorphemeTypes = {
    MorphemeType::kPrefix, MorphemeType::kSuffix, MorphemeType::kStem,
    MorphemeType::kClitic};

// Singular lowercase tag as used in the coherence TSV ("prefix", ...).
std::string_view MorphemeTypeTag(MorphemeType type);
// Plural key as used in the inventory JSON ("prefixes", ...).
std::string_view MorphemeTypeKey(MorphemeType type);
std::optional<MorphemeType> ParseMorphemeTypeTag(std::string_view tag);
std::optional<MorphemeType> ParseMorphemeTypeKey(std::string_view key);

// Suffixes and clitics attach at the end of a word.
inline bool IsWordFinal(MorphemeType type) {
  return type == MorphemeType::kSuffix || type == MorphemeType::kClitic;
}

// Gold morphemes grouped by type. A missing map entry means the section was
// absent from the source; an empty set means it was present but empty.
struct MorphemeInventory {
  std::map<MorphemeType, std::set<std::string>> sections;

  bool Has(MorphemeType type) const { return sections.count(type) != 0; }
  // Throws Error(kMissingInventory) when the section is absent.
  const std::set<std::string>& Section(MorphemeType type) const;

  // Normalizes and deduplicates `entries`; rejects empty or marker-bearing
  // entries with Error(kValidationError, 1-based index).
  void AddSection(MorphemeType type, const std::vector<std::string>& entries,
                  const NormalizationConfig& cfg);
};

struct CoherencePair {
  std::string word;
  std::string morpheme;
  MorphemeType type = MorphemeType::kStem;

  // Builds a normalized pair; throws Error(kValidationError) if the morpheme
  // does not sit where its type requires.
  static CoherencePair Make(std::string_view word, std::string_view morpheme,
                            MorphemeType type, const NormalizationConfig& cfg,
                            std::size_t row = 0);
};

bool MorphemeFitsPosition(std::string_view word, std::string_view morpheme,
                          MorphemeType type);

struct GoldReading {
  std::string pos;
  std::vector<std::string> morphemes;

  bool operator==(const GoldReading&) const = default;
};

struct GoldEntry {
  std::string word;
  std::vector<GoldReading> readings;  // file order
};

// Word -> part-of-speech -> morpheme sequence, in file order.
class GoldSegmentations {
 public:
  // Validates the entry (non-empty readings whose morphemes concatenate to
  // the word) and rejects repeated words. Inputs must already be normalized.
  void Add(GoldEntry entry, std::size_t row = 0);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<GoldEntry>& entries() const noexcept { return entries_; }
  const GoldEntry* Find(std::string_view word) const;

 private:
  std::vector<GoldEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Tokenizer output for one word. Tokens are stored exactly as they appear in
// the vocabulary, continuation markers included.
struct Segmentation {
  std::string word;
  std::vector<std::string> tokens;
  bool contains_unknown = false;

  bool operator==(const Segmentation&) const = default;
};

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;
};

// Token surfaces with the marker removed from every non-initial token.
std::vector<std::string> StrippedTokens(const Segmentation& seg,
                                        std::string_view marker);

// Byte spans of each stripped token inside `seg.word`. Only meaningful when
// contains_unknown is false.
std::vector<Span> TokenSpans(const Segmentation& seg, std::string_view marker);

// Checks the round-trip and marker-discipline invariants.
bool IsWellFormed(const Segmentation& seg, const NormalizationConfig& cfg);

}  // namespace morpheval
