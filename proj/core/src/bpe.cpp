#include "morpheval/bpe.hpp"

#include <limits>

#include "agglomerative.hpp"
#include "morpheval/errors.hpp"

namespace morpheval {

BpeModel TrainBpe(const WordCounts& counts, const TrainerConfig& cfg) {
  detail::AgglomerativeResult result = detail::TrainAgglomerative(
      counts, cfg, detail::MergeCriterion::kFrequency);
  return {Vocabulary(std::move(result.tokens),
                     cfg.normalization.continuation_marker),
          MergeTable(std::move(result.merges))};
}

BpeModel TrainBpe(const std::vector<std::string>& sentences,
                  const TrainerConfig& cfg) {
  return TrainBpe(CountWords(sentences, cfg.normalization, cfg.jobs), cfg);
}

namespace {

Segmentation Unknown(std::string word, const NormalizationConfig& cfg) {
  return {std::move(word), {cfg.unknown_token}, true};
}

}  // namespace

Segmentation EncodeBpe(std::string_view word, const Vocabulary& vocab,
                       const MergeTable& merges,
                       const NormalizationConfig& cfg) {
  std::string normalized = Normalize(word, cfg);
  const std::string& marker = cfg.continuation_marker;

  std::vector<std::string> symbols;
  std::size_t pos = 0;
  while (pos < normalized.size()) {
    const std::size_t start = pos;
    NextCodepoint(normalized, pos);
    std::string symbol = symbols.empty() ? std::string() : marker;
    symbol.append(normalized, start, pos - start);
    if (!vocab.Contains(symbol)) return Unknown(std::move(normalized), cfg);
    symbols.push_back(std::move(symbol));
  }

  // Replaying the table rule by rule is equivalent to repeatedly applying
  // the lowest-ranked rule present that ranks after the last applied one:
  // every skipped rule has no occurrence and is a no-op.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t last = kNone;
  while (symbols.size() > 1) {
    std::size_t best = kNone;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      const std::optional<std::size_t> rank =
          merges.Rank(symbols[i], symbols[i + 1]);
      if (!rank || (last != kNone && *rank <= last)) continue;
      if (best == kNone || *rank < best) best = *rank;
    }
    if (best == kNone) break;
    const MergeRule& rule = merges[best];
    std::vector<std::string> next;
    next.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size();) {
      if (i + 1 < symbols.size() && symbols[i] == rule.left &&
          symbols[i + 1] == rule.right) {
        next.push_back(MergeTable::Product(rule.left, rule.right, marker));
        i += 2;
      } else {
        next.push_back(std::move(symbols[i]));
        ++i;
      }
    }
    symbols = std::move(next);
    last = best;
  }
  return {std::move(normalized), std::move(symbols), false};
}

BpeEncoder::BpeEncoder(std::shared_ptr<const Vocabulary> vocab,
                       std::shared_ptr<const MergeTable> merges,
                       NormalizationConfig cfg)
    : vocab_(std::move(vocab)), merges_(std::move(merges)), cfg_(std::move(cfg)) {
  cfg_.Validate();
  if (!vocab_ || !merges_) {
    throw Error(ErrorCode::kInvalidConfig, "BPE encoder needs vocab and merges");
  }
  if (vocab_->marker() != cfg_.continuation_marker) {
    throw Error(ErrorCode::kInvalidConfig,
                "vocabulary marker differs from the configured marker");
  }
}

Segmentation BpeEncoder::Segment(std::string_view word) const {
  return EncodeBpe(word, *vocab_, *merges_, cfg_);
}

}  // namespace morpheval
