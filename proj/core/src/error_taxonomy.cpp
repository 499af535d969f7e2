#include "morpheval/error_taxonomy.hpp"

#include <algorithm>

#include "morpheval/errors.hpp"
#include "morpheval/parallel.hpp"

namespace morpheval {

std::string_view ErrorTypeName(ErrorType type) {
  switch (type) {
    case ErrorType::kUnderSegmentation: return "Type1";
    case ErrorType::kOverSegmentation: return "Type2";
    case ErrorType::kMorphemeAbsent: return "Type3";
    case ErrorType::kMorphemeNotSelected: return "Type4";
  }
  return "Type4";
}

std::string_view ErrorTypeLabel(ErrorType type) {
  switch (type) {
    case ErrorType::kUnderSegmentation: return "under-segmentation";
    case ErrorType::kOverSegmentation: return "over-segmentation";
    case ErrorType::kMorphemeAbsent: return "morpheme absent";
    case ErrorType::kMorphemeNotSelected: return "morpheme not selected";
  }
  return "morpheme not selected";
}

namespace {

std::vector<Span> MorphemeSpans(const GoldReading& reading) {
  std::vector<Span> spans;
  spans.reserve(reading.morphemes.size());
  std::size_t offset = 0;
  for (const std::string& m : reading.morphemes) {
    spans.push_back({offset, offset + m.size()});
    offset += m.size();
  }
  return spans;
}

void AddUnique(std::vector<std::string>& out, std::string value) {
  if (std::find(out.begin(), out.end(), value) == out.end()) {
    out.push_back(std::move(value));
  }
}

std::vector<std::string> MissingPositionalForms(const GoldReading& reading,
                                                const Vocabulary& vocab,
                                                const std::string& marker) {
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < reading.morphemes.size(); ++i) {
    std::string form = i == 0 ? reading.morphemes[i] : marker + reading.morphemes[i];
    if (!vocab.Contains(form)) AddUnique(missing, std::move(form));
  }
  return missing;
}

std::vector<std::string> UncoveredCharacters(const std::string& word,
                                             const Vocabulary& vocab,
                                             const std::string& marker) {
  std::vector<std::string> missing;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const std::size_t start = pos;
    NextCodepoint(word, pos);
    std::string form = start == 0 ? std::string() : marker;
    form.append(word, start, pos - start);
    if (!vocab.Contains(form)) AddUnique(missing, std::move(form));
  }
  return missing;
}

}  // namespace

std::size_t BestMatchingReading(const GoldEntry& gold,
                                const Segmentation& output,
                                std::string_view marker) {
  const std::vector<Span> token_spans = TokenSpans(output, marker);
  std::size_t best = 0;
  std::size_t best_overlap = 0;
  for (std::size_t r = 0; r < gold.readings.size(); ++r) {
    std::size_t overlap = 0;
    for (const Span& span : MorphemeSpans(gold.readings[r])) {
      if (std::find(token_spans.begin(), token_spans.end(), span) !=
          token_spans.end()) {
        ++overlap;
      }
    }
    if (r == 0 || overlap > best_overlap) {
      best = r;
      best_overlap = overlap;
    }
  }
  return best;
}

ErrorClassification ClassifyError(const GoldEntry& gold,
                                  const Segmentation& output,
                                  const Vocabulary& vocab,
                                  const NormalizationConfig& cfg) {
  if (gold.readings.empty()) {
    throw Error(ErrorCode::kValidationError,
                "word '" + gold.word + "' has no gold readings");
  }
  const std::string& marker = cfg.continuation_marker;
  ErrorClassification result;

  if (const auto match = MatchingReading(gold, output, marker)) {
    result.reading = *match;
    return result;
  }

  if (output.contains_unknown) {
    result.error = ErrorType::kMorphemeAbsent;
    result.reading = 0;
    result.missing_morphemes = UncoveredCharacters(gold.word, vocab, marker);
    if (result.missing_morphemes.empty()) {
      result.missing_morphemes =
          MissingPositionalForms(gold.readings[0], vocab, marker);
    }
    if (result.missing_morphemes.empty()) {
      result.missing_morphemes.push_back(gold.word);
    }
    return result;
  }

  const std::size_t n_tokens = output.tokens.size();
  const bool all_multi = std::all_of(
      gold.readings.begin(), gold.readings.end(),
      [](const GoldReading& r) { return r.morphemes.size() > 1; });
  const auto single = std::find_if(
      gold.readings.begin(), gold.readings.end(),
      [](const GoldReading& r) { return r.morphemes.size() == 1; });

  if (n_tokens == 1 && all_multi) {
    result.error = ErrorType::kUnderSegmentation;
    result.reading = BestMatchingReading(gold, output, marker);
    return result;
  }
  if (n_tokens > 1 && single != gold.readings.end()) {
    result.error = ErrorType::kOverSegmentation;
    result.reading = static_cast<std::size_t>(single - gold.readings.begin());
    return result;
  }

  result.reading = BestMatchingReading(gold, output, marker);
  result.missing_morphemes =
      MissingPositionalForms(gold.readings[result.reading], vocab, marker);
  result.error = result.missing_morphemes.empty()
                     ? ErrorType::kMorphemeNotSelected
                     : ErrorType::kMorphemeAbsent;
  return result;
}

ErrorAnalysis AnalyzeErrors(const Segmenter& segmenter,
                            const GoldSegmentations& gold,
                            const Vocabulary& vocab, const MetricsConfig& cfg) {
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyInput, "accuracy dataset is empty");
  }
  const auto& entries = gold.entries();
  std::vector<WordVerdict> verdicts(entries.size());
  std::vector<std::vector<std::string>> missing(entries.size());
  ForEachShard(entries.size(), cfg.jobs,
               [&](std::size_t, std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i) {
                   WordVerdict& v = verdicts[i];
                   v.word = entries[i].word;
                   v.output = segmenter.Segment(entries[i].word);
                   ErrorClassification c =
                       ClassifyError(entries[i], v.output, vocab, cfg.normalization);
                   v.error = c.error;
                   v.gold_reading = entries[i].readings[c.reading];
                   missing[i] = std::move(c.missing_morphemes);
                 }
               });

  ErrorAnalysis analysis;
  analysis.profile.n_words = entries.size();
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const WordVerdict& v = verdicts[i];
    if (!v.error) {
      ++analysis.profile.n_correct;
      continue;
    }
    ++analysis.profile.counts[static_cast<std::size_t>(*v.error) - 1];
    analysis.records.push_back(
        {v.word, v.gold_reading, v.output, *v.error, std::move(missing[i])});
  }
  analysis.verdicts = std::move(verdicts);
  return analysis;
}

}  // namespace morpheval
