#include "morpheval/wordpiece.hpp"

#include <algorithm>

#include "agglomerative.hpp"
#include "morpheval/errors.hpp"

namespace morpheval {

Vocabulary TrainWordpiece(const WordCounts& counts, const TrainerConfig& cfg) {
  detail::AgglomerativeResult result = detail::TrainAgglomerative(
      counts, cfg, detail::MergeCriterion::kLikelihood);
  return Vocabulary(std::move(result.tokens),
                    cfg.normalization.continuation_marker);
}

Vocabulary TrainWordpiece(const std::vector<std::string>& sentences,
                          const TrainerConfig& cfg) {
  return TrainWordpiece(CountWords(sentences, cfg.normalization, cfg.jobs),
                        cfg);
}

Segmentation EncodeWordpiece(std::string_view word, const Vocabulary& vocab,
                             const NormalizationConfig& cfg,
                             const WordpieceOptions& options) {
  std::string normalized = Normalize(word, cfg);
  const std::vector<std::size_t> offsets = CodepointOffsets(normalized);
  const std::size_t n = offsets.size() - 1;
  auto unknown = [&] {
    return Segmentation{std::move(normalized), {cfg.unknown_token}, true};
  };
  if (options.max_input_chars_per_word != 0 &&
      n > options.max_input_chars_per_word) {
    return unknown();
  }

  std::vector<std::string> tokens;
  std::string candidate;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = std::min(n, start + vocab.max_surface_chars());
    bool found = false;
    for (; end > start; --end) {
      candidate.clear();
      if (start > 0) candidate = cfg.continuation_marker;
      candidate.append(normalized, offsets[start], offsets[end] - offsets[start]);
      if (vocab.Contains(candidate)) {
        found = true;
        break;
      }
    }
    if (!found) return unknown();
    tokens.push_back(candidate);
    start = end;
  }
  return {std::move(normalized), std::move(tokens), false};
}

WordpieceEncoder::WordpieceEncoder(std::shared_ptr<const Vocabulary> vocab,
                                   NormalizationConfig cfg,
                                   WordpieceOptions options)
    : vocab_(std::move(vocab)), cfg_(std::move(cfg)), options_(options) {
  cfg_.Validate();
  if (!vocab_) {
    throw Error(ErrorCode::kInvalidConfig, "Wordpiece encoder needs a vocab");
  }
  if (vocab_->marker() != cfg_.continuation_marker) {
    throw Error(ErrorCode::kInvalidConfig,
                "vocabulary marker differs from the configured marker");
  }
}

Segmentation WordpieceEncoder::Segment(std::string_view word) const {
  return EncodeWordpiece(word, *vocab_, cfg_, options_);
}

}  // namespace morpheval
