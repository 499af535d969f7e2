#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morpheval/morphology.hpp"
#include "morpheval/percent.hpp"
#include "morpheval/segmenter.hpp"
#include "morpheval/unicode.hpp"
#include "morpheval/vocabulary.hpp"

namespace morpheval {

struct MetricsConfig {
  NormalizationConfig normalization;
  // Also accept the bare form of a suffix/clitic as a vocabulary match.
  bool suffix_match_unmarked = false;
  // Require suffix/clitic tokens to end at the word end when judging
  // coherence. Prefixes are always anchored at the word start.
  bool anchor_suffixes = true;
  int jobs = 1;

  bool operator==(const MetricsConfig&) const = default;
};

// Vocabulary form of a morpheme by type: prefixes and stems appear bare,
// suffixes and clitics as continuation tokens.
bool MorphemeInVocabulary(std::string_view morpheme, MorphemeType type,
                          const Vocabulary& vocab, const MetricsConfig& cfg);

// ---------------------------------------------------------------------------
// Relevance

struct RelevanceRow {
  MorphemeType type = MorphemeType::kPrefix;
  std::uint64_t inventory_size = 0;
  std::uint64_t vocab_size = 0;
  std::vector<std::string> matched;  // sorted

  // Precision is measured against the full vocabulary, special tokens
  // included.
  Fixed2 precision() const { return RoundedPercent(matched.size(), vocab_size); }
  Fixed2 recall() const { return RoundedPercent(matched.size(), inventory_size); }
  // 2PR/(P+R) reduces to 2|matched| / (|vocab| + |inventory|).
  Fixed2 f1() const {
    return RoundedPercent(2 * matched.size(), vocab_size + inventory_size);
  }
};

struct RelevanceReport {
  std::uint64_t vocab_size = 0;
  std::vector<RelevanceRow> rows;   // inventory type order
  std::vector<std::string> notes;   // skipped sections
};

RelevanceReport EvalRelevance(const Vocabulary& vocab,
                              const MorphemeInventory& inventory,
                              const MetricsConfig& cfg);

// ---------------------------------------------------------------------------
// Coherence

enum class CoherenceOutcome { kSingleToken, kRecognized, kNotRecognized };

std::string_view CoherenceOutcomeName(CoherenceOutcome outcome);

// Single token; else recognized when a token's stripped surface equals the
// morpheme at a span its type allows; else not recognized. Throws
// Error(kUnknownInWord) when the segmentation contains the unknown token and
// Error(kValidationError) when it belongs to a different word.
CoherenceOutcome ClassifyPair(const Segmentation& seg,
                              const CoherencePair& pair,
                              const MetricsConfig& cfg);

struct CoherenceCounts {
  std::uint64_t single_token = 0;
  std::uint64_t recognized = 0;
  std::uint64_t not_recognized = 0;
  std::uint64_t excluded_unknown = 0;

  std::uint64_t evaluated() const {
    return single_token + recognized + not_recognized;
  }
  std::uint64_t total() const { return evaluated() + excluded_unknown; }

  Fixed2 pct_single_token() const { return RoundedPercent(single_token, evaluated()); }
  Fixed2 pct_recognized() const { return RoundedPercent(recognized, evaluated()); }
  Fixed2 pct_not_recognized() const { return RoundedPercent(not_recognized, evaluated()); }

  CoherenceCounts& operator+=(const CoherenceCounts& other);
  bool operator==(const CoherenceCounts&) const = default;
};

struct CoherenceRow {
  std::optional<MorphemeType> type;  // nullopt: overall row
  CoherenceCounts counts;
};

struct CoherenceReport {
  // One row per morpheme type present (prefix, stem, suffix, clitic), then
  // the overall row weighted by pair counts.
  std::vector<CoherenceRow> rows;

  const CoherenceRow* Find(std::optional<MorphemeType> type) const;
};

// Display order for coherence rows.
inline constexpr std::array<MorphemeType, 4> kCoherenceOrder = {
    MorphemeType::kPrefix, MorphemeType::kStem, MorphemeType::kSuffix,
    MorphemeType::kClitic};

CoherenceReport EvalCoherence(const Segmenter& segmenter,
                              const std::vector<CoherencePair>& pairs,
                              const MetricsConfig& cfg);

// ---------------------------------------------------------------------------
// Accuracy

// Index of the first gold reading equal to the stripped token sequence.
std::optional<std::size_t> MatchingReading(const GoldEntry& entry,
                                           const Segmentation& seg,
                                           std::string_view marker);

struct AccuracyItem {
  std::string word;
  Segmentation output;
  std::optional<std::size_t> matched_reading;
};

struct AccuracyReport {
  std::uint64_t n_words = 0;
  std::uint64_t n_correct = 0;
  std::uint64_t total_tokens = 0;
  std::vector<AccuracyItem> per_word;  // gold file order

  Fixed2 accuracy() const { return RoundedPercent(n_correct, n_words); }
  Fixed2 mean_tokens_per_word() const { return RoundedRatio(total_tokens, n_words); }
};

AccuracyReport EvalAccuracy(const Segmenter& segmenter,
                            const GoldSegmentations& gold,
                            const MetricsConfig& cfg);

}  // namespace morpheval
