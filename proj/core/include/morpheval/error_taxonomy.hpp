#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morpheval/metrics.hpp"
#include "morpheval/morphology.hpp"
#include "morpheval/segmenter.hpp"
#include "morpheval/vocabulary.hpp"

namespace morpheval {

enum class ErrorType {
  kUnderSegmentation = 1,    // Type 1
  kOverSegmentation = 2,     // Type 2
  kMorphemeAbsent = 3,       // Type 3
  kMorphemeNotSelected = 4,  // Type 4
};

inline constexpr std::array<ErrorType, 4> kAllErrorTypes = {
    ErrorType::kUnderSegmentation, ErrorType::kOverSegmentation,
    ErrorType::kMorphemeAbsent, ErrorType::kMorphemeNotSelected};

std::string_view ErrorTypeName(ErrorType type);  // "Type1" ... "Type4"
std::string_view ErrorTypeLabel(ErrorType type);  // "under-segmentation" ...

struct ErrorClassification {
  std::optional<ErrorType> error;  // nullopt: correct
  // Reading the verdict was judged against: the matching reading when
  // correct, the best-overlapping one otherwise.
  std::size_t reading = 0;
  // Vocabulary forms that were needed but missing (Type 3 only). For words
  // containing the unknown token these are the uncovered characters.
  std::vector<std::string> missing_morphemes;
};

// Ordered decision tree:
//   correct     stripped output equals some gold reading
//   Type 3      output contains the unknown token
//   Type 1      one output token, every reading has several morphemes
//   Type 2      several output tokens, some reading is a single morpheme
//   Type 3      a positional form (first bare, rest marked) of the
//               best-overlapping reading is not in the vocabulary
//   Type 4      otherwise
ErrorClassification ClassifyError(const GoldEntry& gold,
                                  const Segmentation& output,
                                  const Vocabulary& vocab,
                                  const NormalizationConfig& cfg);

// Reading sharing the most morpheme spans with the output's token spans;
// ties go to the earliest reading.
std::size_t BestMatchingReading(const GoldEntry& gold,
                                const Segmentation& output,
                                std::string_view marker);

struct ErrorRecord {
  std::string word;
  GoldReading gold_reading;
  Segmentation output;
  ErrorType type = ErrorType::kUnderSegmentation;
  std::vector<std::string> missing_morphemes;
};

struct ErrorProfile {
  std::array<std::uint64_t, 4> counts{};  // indexed by type - 1
  std::uint64_t n_words = 0;
  std::uint64_t n_correct = 0;

  std::uint64_t count(ErrorType type) const {
    return counts[static_cast<std::size_t>(type) - 1];
  }
  std::uint64_t total() const {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
  // |gold| - |correct|; equals total() by construction, reported alongside
  // it so external expectations can be checked against both.
  std::uint64_t incorrect() const { return n_words - n_correct; }
};

// One line of the qualitative examples view.
struct WordVerdict {
  std::string word;
  GoldReading gold_reading;
  Segmentation output;
  std::optional<ErrorType> error;
};

struct ErrorAnalysis {
  ErrorProfile profile;
  std::vector<ErrorRecord> records;  // errors only, gold file order
  std::vector<WordVerdict> verdicts;  // every word, gold file order
};

ErrorAnalysis AnalyzeErrors(const Segmenter& segmenter,
                            const GoldSegmentations& gold,
                            const Vocabulary& vocab, const MetricsConfig& cfg);

}  // namespace morpheval
