#include "morpheval/segmenter.hpp"

#include <optional>

#include "morpheval/errors.hpp"
#include "morpheval/parallel.hpp"

namespace morpheval {

std::vector<Segmentation> TokenizeBatch(const Segmenter& segmenter,
                                        std::span<const std::string> words,
                                        int jobs) {
  std::vector<Segmentation> out(words.size());
  const std::size_t shards = ShardCount(words.size(), jobs);
  std::vector<std::optional<BatchError>> failures(shards);
  ForEachShard(words.size(), jobs,
               [&](std::size_t shard, std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i) {
                   try {
                     out[i] = segmenter.Segment(words[i]);
                   } catch (const Error& e) {
                     failures[shard].emplace(e, i);
                     return;
                   }
                 }
               });
  for (const auto& failure : failures) {
    if (failure) throw *failure;
  }
  return out;
}

}  // namespace morpheval
