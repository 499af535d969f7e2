#include "morpheval/pretokenize.hpp"

#include <unordered_map>

#include "morpheval/errors.hpp"
#include "morpheval/parallel.hpp"

namespace morpheval {

std::vector<std::string> PreTokenize(std::string_view sentence) {
  std::vector<std::string> words;
  std::string current;
  std::size_t pos = 0;
  while (pos < sentence.size()) {
    const std::size_t start = pos;
    const int cp = NextCodepoint(sentence, pos);
    if (cp < 0) {
      throw Error(ErrorCode::kEncodingError, "invalid UTF-8 in corpus");
    }
    if (IsUnicodeWhitespace(cp)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else if (IsPunctuation(cp)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
      words.emplace_back(sentence.substr(start, pos - start));
    } else {
      current.append(sentence.substr(start, pos - start));
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

WordCounts CountWords(const std::vector<std::string>& sentences,
                      const NormalizationConfig& cfg, int jobs) {
  const std::size_t shards = ShardCount(sentences.size(), jobs);
  std::vector<std::unordered_map<std::string, std::uint64_t>> partial(shards);
  ForEachShard(sentences.size(), jobs,
               [&](std::size_t shard, std::size_t begin, std::size_t end) {
                 auto& counts = partial[shard];
                 for (std::size_t i = begin; i < end; ++i) {
                   std::vector<std::string> words;
                   try {
                     words = PreTokenize(sentences[i]);
                   } catch (const Error& e) {
                     throw Error(e.code(), e.detail(), i + 1);
                   }
                   for (const std::string& w : words) {
                     ++counts[Normalize(w, cfg)];
                   }
                 }
               });
  WordCounts merged;
  for (const auto& counts : partial) {
    for (const auto& [word, n] : counts) merged[word] += n;
  }
  return merged;
}

}  // namespace morpheval
