#include <benchmark/benchmark.h>

#include "morpheval/bpe.hpp"
#include "morpheval/wordpiece.hpp"
#include "synthetic.hpp"

namespace morpheval::bench {
namespace {

WordCounts Counts(std::size_t n) {
  WordCounts counts;
  const auto words = Words(n);
  for (std::size_t i = 0; i < words.size(); ++i) counts[words[i]] += 1 + i % 7;
  return counts;
}

void BM_TrainBpe(benchmark::State& state) {
  const WordCounts counts = Counts(5000);
  TrainerConfig cfg;
  cfg.target_vocab_size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TrainBpe(counts, cfg));
}
BENCHMARK(BM_TrainBpe)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_TrainWordpiece(benchmark::State& state) {
  const WordCounts counts = Counts(5000);
  TrainerConfig cfg;
  cfg.target_vocab_size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TrainWordpiece(counts, cfg));
}
BENCHMARK(BM_TrainWordpiece)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace morpheval::bench
