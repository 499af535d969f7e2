#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "morpheval/pretokenize.hpp"
#include "morpheval/segmenter.hpp"
#include "morpheval/trainer.hpp"
#include "morpheval/vocabulary.hpp"

namespace morpheval {

// Same agglomerative loop as BPE, but each round merges the pair with the
// highest freq(ab) / (freq(a) * freq(b)). Scores are compared exactly in
// integer arithmetic; ties go to the lexicographically smallest pair.
Vocabulary TrainWordpiece(const std::vector<std::string>& sentences,
                          const TrainerConfig& cfg);
Vocabulary TrainWordpiece(const WordCounts& counts, const TrainerConfig& cfg);

struct WordpieceOptions {
  // Words longer than this many code points become the unknown token.
  // 0 disables the limit.
  std::size_t max_input_chars_per_word = 0;
};

// Greedy longest-match-first: at each position take the longest vocabulary
// token (bare at position 0, marked afterwards). A dead end turns the whole
// word into the unknown token.
Segmentation EncodeWordpiece(std::string_view word, const Vocabulary& vocab,
                             const NormalizationConfig& cfg,
                             const WordpieceOptions& options = {});

class WordpieceEncoder final : public Segmenter {
 public:
  WordpieceEncoder(std::shared_ptr<const Vocabulary> vocab,
                   NormalizationConfig cfg, WordpieceOptions options = {});

  Segmentation Segment(std::string_view word) const override;

  const Vocabulary& vocab() const { return *vocab_; }

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  NormalizationConfig cfg_;
  WordpieceOptions options_;
};

}  // namespace morpheval
