#include "morpheval/metrics.hpp"

#include "morpheval/errors.hpp"
#include "morpheval/parallel.hpp"

namespace morpheval {

bool MorphemeInVocabulary(std::string_view morpheme, MorphemeType type,
                          const Vocabulary& vocab, const MetricsConfig& cfg) {
  if (IsWordFinal(type)) {
    if (vocab.Contains(cfg.normalization.continuation_marker +
                       std::string(morpheme))) {
      return true;
    }
    return cfg.suffix_match_unmarked && vocab.Contains(morpheme);
  }
  return vocab.Contains(morpheme);
}

RelevanceReport EvalRelevance(const Vocabulary& vocab,
                              const MorphemeInventory& inventory,
                              const MetricsConfig& cfg) {
  RelevanceReport report;
  report.vocab_size = vocab.size();
  for (MorphemeType type : kAllMorphemeTypes) {
    const std::string key(MorphemeTypeKey(type));
    if (!inventory.Has(type)) {
      report.notes.push_back(key + ": section absent, skipped");
      continue;
    }
    const std::set<std::string>& section = inventory.Section(type);
    if (section.empty()) {
      report.notes.push_back(key + ": section empty, skipped");
      continue;
    }
    RelevanceRow row;
    row.type = type;
    row.inventory_size = section.size();
    row.vocab_size = vocab.size();
    for (const std::string& m : section) {
      if (MorphemeInVocabulary(m, type, vocab, cfg)) row.matched.push_back(m);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string_view CoherenceOutcomeName(CoherenceOutcome outcome) {
  switch (outcome) {
    case CoherenceOutcome::kSingleToken: return "single_token";
    case CoherenceOutcome::kRecognized: return "recognized";
    case CoherenceOutcome::kNotRecognized: return "not_recognized";
  }
  return "not_recognized";
}

CoherenceOutcome ClassifyPair(const Segmentation& seg,
                              const CoherencePair& pair,
                              const MetricsConfig& cfg) {
  if (seg.contains_unknown) {
    throw Error(ErrorCode::kUnknownInWord,
                "segmentation of '" + seg.word + "' contains the unknown token");
  }
  if (seg.word != pair.word) {
    throw Error(ErrorCode::kValidationError,
                "segmentation is for '" + seg.word + "', pair is for '" +
                    pair.word + "'");
  }
  if (seg.tokens.size() == 1) return CoherenceOutcome::kSingleToken;

  const std::string& marker = cfg.normalization.continuation_marker;
  const std::size_t word_end = seg.word.size();
  std::size_t offset = 0;
  for (std::size_t i = 0; i < seg.tokens.size(); ++i) {
    std::string_view surface = seg.tokens[i];
    if (i > 0 && surface.size() > marker.size() && StartsWith(surface, marker)) {
      surface.remove_prefix(marker.size());
    }
    const std::size_t begin = offset;
    const std::size_t end = offset + surface.size();
    offset = end;
    if (surface != pair.morpheme) continue;
    bool anchored = true;
    if (pair.type == MorphemeType::kPrefix) {
      anchored = begin == 0;
    } else if (IsWordFinal(pair.type) && cfg.anchor_suffixes) {
      anchored = end == word_end;
    }
    if (anchored) return CoherenceOutcome::kRecognized;
  }
  return CoherenceOutcome::kNotRecognized;
}

CoherenceCounts& CoherenceCounts::operator+=(const CoherenceCounts& other) {
  single_token += other.single_token;
  recognized += other.recognized;
  not_recognized += other.not_recognized;
  excluded_unknown += other.excluded_unknown;
  return *this;
}

const CoherenceRow* CoherenceReport::Find(
    std::optional<MorphemeType> type) const {
  for (const CoherenceRow& row : rows) {
    if (row.type == type) return &row;
  }
  return nullptr;
}

CoherenceReport EvalCoherence(const Segmenter& segmenter,
                              const std::vector<CoherencePair>& pairs,
                              const MetricsConfig& cfg) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "coherence dataset is empty");
  }
  using PerType = std::array<CoherenceCounts, 4>;
  const std::size_t shards = ShardCount(pairs.size(), cfg.jobs);
  std::vector<PerType> partial(shards);
  std::vector<std::array<bool, 4>> seen(shards, {false, false, false, false});

  ForEachShard(pairs.size(), cfg.jobs,
               [&](std::size_t shard, std::size_t begin, std::size_t end) {
                 PerType& counts = partial[shard];
                 for (std::size_t i = begin; i < end; ++i) {
                   const CoherencePair& pair = pairs[i];
                   const auto t = static_cast<std::size_t>(pair.type);
                   seen[shard][t] = true;
                   const Segmentation seg = segmenter.Segment(pair.word);
                   if (seg.contains_unknown) {
                     ++counts[t].excluded_unknown;
                     continue;
                   }
                   switch (ClassifyPair(seg, pair, cfg)) {
                     case CoherenceOutcome::kSingleToken:
                       ++counts[t].single_token;
                       break;
                     case CoherenceOutcome::kRecognized:
                       ++counts[t].recognized;
                       break;
                     case CoherenceOutcome::kNotRecognized:
                       ++counts[t].not_recognized;
                       break;
                   }
                 }
               });

  PerType totals{};
  std::array<bool, 4> present{false, false, false, false};
  for (std::size_t s = 0; s < shards; ++s) {
    for (std::size_t t = 0; t < 4; ++t) {
      totals[t] += partial[s][t];
      present[t] = present[t] || seen[s][t];
    }
  }

  CoherenceReport report;
  CoherenceCounts overall;
  for (MorphemeType type : kCoherenceOrder) {
    const auto t = static_cast<std::size_t>(type);
    if (!present[t]) continue;
    report.rows.push_back({type, totals[t]});
    overall += totals[t];
  }
  report.rows.push_back({std::nullopt, overall});
  return report;
}

std::optional<std::size_t> MatchingReading(const GoldEntry& entry,
                                           const Segmentation& seg,
                                           std::string_view marker) {
  if (seg.contains_unknown) return std::nullopt;
  const std::vector<std::string> stripped = StrippedTokens(seg, marker);
  for (std::size_t r = 0; r < entry.readings.size(); ++r) {
    if (entry.readings[r].morphemes == stripped) return r;
  }
  return std::nullopt;
}

AccuracyReport EvalAccuracy(const Segmenter& segmenter,
                            const GoldSegmentations& gold,
                            const MetricsConfig& cfg) {
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyInput, "accuracy dataset is empty");
  }
  const auto& entries = gold.entries();
  AccuracyReport report;
  report.per_word.resize(entries.size());
  ForEachShard(entries.size(), cfg.jobs,
               [&](std::size_t, std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i) {
                   AccuracyItem& item = report.per_word[i];
                   item.word = entries[i].word;
                   item.output = segmenter.Segment(entries[i].word);
                   item.matched_reading = MatchingReading(
                       entries[i], item.output,
                       cfg.normalization.continuation_marker);
                 }
               });
  report.n_words = entries.size();
  for (const AccuracyItem& item : report.per_word) {
    if (item.matched_reading) ++report.n_correct;
    report.total_tokens += item.output.contains_unknown ? 1 : item.output.tokens.size();
  }
  return report;
}

}  // namespace morpheval
