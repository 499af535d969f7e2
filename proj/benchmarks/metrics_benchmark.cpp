#include <benchmark/benchmark.h>

#include <memory>

#include "morpheval/metrics.hpp"
#include "morpheval/wordpiece.hpp"
#include "synthetic.hpp"

namespace morpheval::bench {
namespace {

void BM_EvalCoherence(benchmark::State& state) {
  const auto words = Words(20000);
  const auto vocab = std::make_shared<const Vocabulary>(VocabTokens(words, 31000), "##");
  const NormalizationConfig norm;
  const WordpieceEncoder encoder(vocab, norm);
  std::vector<CoherencePair> pairs;
  for (std::size_t i = 0; i < 100000; ++i) {
    const std::string& w = words[i % words.size()];
    pairs.push_back(i % 2 ? CoherencePair::Make(w, w.substr(w.size() - LastCharBytes(w)), MorphemeType::kSuffix, norm)
                          : CoherencePair::Make(w, w.substr(0, FirstCharBytes(w)), MorphemeType::kPrefix, norm));
  }
  MetricsConfig cfg;
  cfg.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(EvalCoherence(encoder, pairs, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_EvalCoherence)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace morpheval::bench
