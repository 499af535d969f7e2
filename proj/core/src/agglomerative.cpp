#include "agglomerative.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "morpheval/errors.hpp"
#include "morpheval/parallel.hpp"
#include "morpheval/unicode.hpp"

namespace morpheval::detail {
namespace {

__extension__ typedef unsigned __int128 Wide;

using SymbolId = std::uint32_t;
using PairKey = std::uint64_t;

PairKey MakeKey(SymbolId a, SymbolId b) {
  return (static_cast<PairKey>(a) << 32) | b;
}
SymbolId KeyLeft(PairKey k) { return static_cast<SymbolId>(k >> 32); }
SymbolId KeyRight(PairKey k) { return static_cast<SymbolId>(k & 0xffffffffu); }

class Engine {
 public:
  Engine(const WordCounts& counts, const TrainerConfig& cfg,
         MergeCriterion criterion)
      : cfg_(cfg),
        marker_(cfg.normalization.continuation_marker),
        criterion_(criterion),
        ranked_(RankOrder{this}) {
    Initialize(counts);
  }

  AgglomerativeResult Run();

 private:
  struct RankOrder {
    const Engine* engine;
    bool operator()(const std::pair<std::uint64_t, PairKey>& x,
                    const std::pair<std::uint64_t, PairKey>& y) const {
      if (x.first != y.first) return x.first > y.first;
      return engine->PairLess(x.second, y.second);
    }
  };

  void Initialize(const WordCounts& counts);
  SymbolId Intern(const std::string& symbol);
  bool PairLess(PairKey x, PairKey y) const;
  bool Eligible(std::uint64_t count) const {
    return count > 0 && count >= cfg_.min_pair_frequency;
  }
  std::optional<PairKey> SelectFrequency() const;
  std::optional<PairKey> SelectLikelihood() const;
  void AdjustPair(PairKey key, std::int64_t delta, std::uint32_t word);
  void ApplyMerge(PairKey key, SymbolId product);

  const TrainerConfig& cfg_;
  const std::string& marker_;
  MergeCriterion criterion_;

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> symbol_ids_;
  std::vector<std::uint64_t> symbol_count_;

  std::vector<std::vector<SymbolId>> words_;
  std::vector<std::uint64_t> freq_;

  std::unordered_map<PairKey, std::uint64_t> pair_count_;
  std::unordered_map<PairKey, std::vector<std::uint32_t>> where_;
  std::set<std::pair<std::uint64_t, PairKey>, RankOrder> ranked_;

  std::vector<std::string> tokens_;
  std::unordered_set<std::string> in_vocab_;
};

SymbolId Engine::Intern(const std::string& symbol) {
  auto [it, inserted] =
      symbol_ids_.emplace(symbol, static_cast<SymbolId>(symbols_.size()));
  if (inserted) {
    symbols_.push_back(symbol);
    symbol_count_.push_back(0);
  }
  return it->second;
}

bool Engine::PairLess(PairKey x, PairKey y) const {
  const std::string& xl = symbols_[KeyLeft(x)];
  const std::string& yl = symbols_[KeyLeft(y)];
  if (xl != yl) return xl < yl;
  return symbols_[KeyRight(x)] < symbols_[KeyRight(y)];
}

void Engine::Initialize(const WordCounts& counts) {
  if (counts.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus contains no words");
  }
  std::set<std::string> alphabet;
  words_.reserve(counts.size());
  freq_.reserve(counts.size());
  for (const auto& [word, n] : counts) {
    std::vector<SymbolId> seq;
    std::size_t pos = 0;
    bool first = true;
    while (pos < word.size()) {
      const std::size_t start = pos;
      NextCodepoint(word, pos);
      std::string symbol = first ? std::string() : marker_;
      symbol.append(word, start, pos - start);
      alphabet.insert(symbol);
      seq.push_back(Intern(symbol));
      first = false;
    }
    words_.push_back(std::move(seq));
    freq_.push_back(n);
  }

  for (const std::string& special : cfg_.EffectiveSpecialTokens()) {
    if (in_vocab_.insert(special).second) tokens_.push_back(special);
  }
  for (const std::string& symbol : alphabet) {
    if (in_vocab_.insert(symbol).second) tokens_.push_back(symbol);
  }
  if (cfg_.target_vocab_size <= tokens_.size()) {
    throw Error(ErrorCode::kVocabTooSmall,
                "target vocabulary size " +
                    std::to_string(cfg_.target_vocab_size) +
                    " must exceed alphabet plus special tokens (" +
                    std::to_string(tokens_.size()) + ")");
  }

  // Pair and symbol counts are integer sums, so sharding cannot change them.
  const std::size_t shards = ShardCount(words_.size(), cfg_.jobs);
  std::vector<std::unordered_map<PairKey, std::uint64_t>> partial(shards);
  std::vector<std::vector<std::uint64_t>> partial_symbols(
      shards, std::vector<std::uint64_t>(symbols_.size(), 0));
  ForEachShard(words_.size(), cfg_.jobs,
               [&](std::size_t shard, std::size_t begin, std::size_t end) {
                 auto& pairs = partial[shard];
                 auto& syms = partial_symbols[shard];
                 for (std::size_t w = begin; w < end; ++w) {
                   const auto& seq = words_[w];
                   for (std::size_t i = 0; i < seq.size(); ++i) {
                     syms[seq[i]] += freq_[w];
                     if (i + 1 < seq.size()) {
                       pairs[MakeKey(seq[i], seq[i + 1])] += freq_[w];
                     }
                   }
                 }
               });
  for (std::size_t s = 0; s < shards; ++s) {
    for (const auto& [key, n] : partial[s]) pair_count_[key] += n;
    for (std::size_t id = 0; id < symbols_.size(); ++id) {
      symbol_count_[id] += partial_symbols[s][id];
    }
  }
  for (std::uint32_t w = 0; w < words_.size(); ++w) {
    const auto& seq = words_[w];
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      where_[MakeKey(seq[i], seq[i + 1])].push_back(w);
    }
  }
  if (criterion_ == MergeCriterion::kFrequency) {
    for (const auto& [key, n] : pair_count_) ranked_.emplace(n, key);
  }
}

std::optional<PairKey> Engine::SelectFrequency() const {
  if (ranked_.empty()) return std::nullopt;
  const auto& [count, key] = *ranked_.begin();
  if (!Eligible(count)) return std::nullopt;
  return key;
}

std::optional<PairKey> Engine::SelectLikelihood() const {
  std::optional<PairKey> best;
  std::uint64_t best_count = 0;
  Wide best_denominator = 1;
  for (const auto& [key, count] : pair_count_) {
    if (!Eligible(count)) continue;
    const Wide denominator = static_cast<Wide>(symbol_count_[KeyLeft(key)]) *
                             symbol_count_[KeyRight(key)];
    if (!best) {
      best = key;
      best_count = count;
      best_denominator = denominator;
      continue;
    }
    // count / denominator vs best_count / best_denominator, exactly.
    const Wide lhs = static_cast<Wide>(count) * best_denominator;
    const Wide rhs = static_cast<Wide>(best_count) * denominator;
    if (lhs > rhs || (lhs == rhs && PairLess(key, *best))) {
      best = key;
      best_count = count;
      best_denominator = denominator;
    }
  }
  return best;
}

void Engine::AdjustPair(PairKey key, std::int64_t delta, std::uint32_t word) {
  std::uint64_t& count = pair_count_[key];
  const std::uint64_t before = count;
  count = static_cast<std::uint64_t>(static_cast<std::int64_t>(count) + delta);
  if (delta > 0) where_[key].push_back(word);
  if (criterion_ == MergeCriterion::kFrequency) {
    if (before > 0) ranked_.erase({before, key});
    if (count > 0) ranked_.emplace(count, key);
  }
  if (count == 0) {
    pair_count_.erase(key);
    where_.erase(key);
  }
}

void Engine::ApplyMerge(PairKey key, SymbolId product) {
  const SymbolId left = KeyLeft(key);
  const SymbolId right = KeyRight(key);
  std::vector<std::uint32_t> affected = std::move(where_[key]);
  std::sort(affected.begin(), affected.end());
  affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

  for (const std::uint32_t w : affected) {
    std::vector<SymbolId>& seq = words_[w];
    const std::uint64_t f = freq_[w];
    bool present = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] == left && seq[i + 1] == right) {
        present = true;
        break;
      }
    }
    if (!present) continue;

    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      AdjustPair(MakeKey(seq[i], seq[i + 1]), -static_cast<std::int64_t>(f), w);
    }
    std::vector<SymbolId> merged;
    merged.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size();) {
      if (i + 1 < seq.size() && seq[i] == left && seq[i + 1] == right) {
        symbol_count_[left] -= f;
        symbol_count_[right] -= f;
        symbol_count_[product] += f;
        merged.push_back(product);
        i += 2;
      } else {
        merged.push_back(seq[i]);
        ++i;
      }
    }
    seq = std::move(merged);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      AdjustPair(MakeKey(seq[i], seq[i + 1]), static_cast<std::int64_t>(f), w);
    }
  }
}

AgglomerativeResult Engine::Run() {
  std::vector<MergeRule> merges;
  while (tokens_.size() < cfg_.target_vocab_size) {
    const std::optional<PairKey> chosen = criterion_ == MergeCriterion::kFrequency
                                              ? SelectFrequency()
                                              : SelectLikelihood();
    if (!chosen) break;
    const std::string left = symbols_[KeyLeft(*chosen)];
    const std::string right = symbols_[KeyRight(*chosen)];
    const std::string product = MergeTable::Product(left, right, marker_);
    const SymbolId product_id = Intern(product);
    merges.push_back({left, right});
    if (in_vocab_.insert(product).second) tokens_.push_back(product);
    ApplyMerge(*chosen, product_id);
  }
  return {std::move(tokens_), std::move(merges)};
}

}  // namespace

AgglomerativeResult TrainAgglomerative(const WordCounts& counts,
                                       const TrainerConfig& cfg,
                                       MergeCriterion criterion) {
  cfg.normalization.Validate();
  if (cfg.min_pair_frequency == 0) {
    throw Error(ErrorCode::kInvalidConfig, "min_pair_frequency must be >= 1");
  }
  Engine engine(counts, cfg, criterion);
  return engine.Run();
}

}  // namespace morpheval::detail
