#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "morpheval/merge_table.hpp"
#include "morpheval/pretokenize.hpp"
#include "morpheval/segmenter.hpp"
#include "morpheval/trainer.hpp"
#include "morpheval/vocabulary.hpp"

namespace morpheval {

struct BpeModel {
  Vocabulary vocab;
  MergeTable merges;
};

// Frequency-driven merge training. Each round merges the most frequent
// adjacent pair (ties: lexicographically smallest (left, right)) until the
// vocabulary reaches cfg.target_vocab_size or no pair reaches
// cfg.min_pair_frequency.
//
// The vocabulary lists special tokens, then the sorted corpus alphabet (bare
// word-initial characters and marked continuation characters), then merge
// products in merge order.
//
// Throws Error(kEmptyCorpus) and Error(kVocabTooSmall).
BpeModel TrainBpe(const std::vector<std::string>& sentences,
                  const TrainerConfig& cfg);
BpeModel TrainBpe(const WordCounts& counts, const TrainerConfig& cfg);

// Merge-replay encoding: split into characters, then apply every merge rule
// in table order to all of its left-to-right occurrences. A character
// missing from the vocabulary turns the whole word into the unknown token.
Segmentation EncodeBpe(std::string_view word, const Vocabulary& vocab,
                       const MergeTable& merges,
                       const NormalizationConfig& cfg);

class BpeEncoder final : public Segmenter {
 public:
  BpeEncoder(std::shared_ptr<const Vocabulary> vocab,
             std::shared_ptr<const MergeTable> merges, NormalizationConfig cfg);

  Segmentation Segment(std::string_view word) const override;

  const Vocabulary& vocab() const { return *vocab_; }
  const MergeTable& merges() const { return *merges_; }

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::shared_ptr<const MergeTable> merges_;
  NormalizationConfig cfg_;
};

}  // namespace morpheval
