#include <benchmark/benchmark.h>

#include <memory>

#include "morpheval/bpe.hpp"
#include "morpheval/wordpiece.hpp"
#include "synthetic.hpp"

namespace morpheval::bench {
namespace {

void BM_EncodeWordpiece(benchmark::State& state) {
  const auto words = Words(10000);
  const Vocabulary vocab(VocabTokens(words, static_cast<std::size_t>(state.range(0))), "##");
  const NormalizationConfig cfg;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(EncodeWordpiece(words[i++ % words.size()], vocab, cfg));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EncodeWordpiece)->Arg(1000)->Arg(31000);

void BM_EncodeBpe(benchmark::State& state) {
  const auto words = Words(2000);
  TrainerConfig cfg;
  cfg.target_vocab_size = static_cast<std::size_t>(state.range(0));
  WordCounts counts;
  for (const auto& w : words) ++counts[w];
  const BpeModel model = TrainBpe(counts, cfg);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        EncodeBpe(words[i++ % words.size()], model.vocab, model.merges, cfg.normalization));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EncodeBpe)->Arg(200)->Arg(1000);

}  // namespace
}  // namespace morpheval::bench
