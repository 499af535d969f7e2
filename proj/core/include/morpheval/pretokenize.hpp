#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "morpheval/unicode.hpp"

namespace morpheval {

// Splits a sentence into words on Unicode whitespace; every punctuation
// character becomes a standalone single-character word.
std::vector<std::string> PreTokenize(std::string_view sentence);

// Normalized word -> corpus frequency. Ordered so that downstream training is
// independent of hashing and thread scheduling.
using WordCounts = std::map<std::string, std::uint64_t>;

// Pre-tokenizes and normalizes every sentence, counting words across `jobs`
// workers. Throws Error(kEncodingError, line) on invalid UTF-8.
WordCounts CountWords(const std::vector<std::string>& sentences,
                      const NormalizationConfig& cfg, int jobs = 1);

}  // namespace morpheval
