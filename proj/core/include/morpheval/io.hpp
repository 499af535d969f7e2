#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "morpheval/merge_table.hpp"
#include "morpheval/morphology.hpp"
#include "morpheval/unicode.hpp"
#include "morpheval/vocabulary.hpp"

namespace morpheval {

// Reads a whole file. Throws Error(kIoError, "input not found: <path>") when
// it does not exist.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view bytes);

// vocab.txt: one token per line, line number - 1 = id. Tokens are kept
// verbatim.
Vocabulary LoadVocabulary(std::string_view bytes,
                          const NormalizationConfig& cfg);
std::string WriteVocabulary(const Vocabulary& vocab);

// merges.txt: optional "#..." header line, then "LEFT RIGHT" per line in
// priority order.
MergeTable LoadMergeTable(std::string_view bytes);
std::string WriteMergeTable(const MergeTable& merges);

// JSON object with optional "prefixes", "suffixes", "stems", "clitics"
// arrays of strings.
MorphemeInventory LoadInventory(std::string_view json,
                                const NormalizationConfig& cfg);

// TSV rows: word <TAB> morpheme <TAB> type. Affix hyphens ("re-", "-ción")
// are stripped from the morpheme column.
std::vector<CoherencePair> LoadCoherencePairs(std::string_view tsv,
                                              const NormalizationConfig& cfg);

// JSON object word -> { POS -> [morphemes] }, file order preserved.
GoldSegmentations LoadGoldSegmentations(std::string_view json,
                                        const NormalizationConfig& cfg);

// Splits text into lines on '\n'. A trailing newline does not produce an
// empty final line.
std::vector<std::string_view> SplitLines(std::string_view text);

}  // namespace morpheval
