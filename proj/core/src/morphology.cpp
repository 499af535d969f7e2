#include "morpheval/morphology.hpp"

#include "morpheval/errors.hpp"

namespace morpheval {

std::string_view MorphemeTypeTag(MorphemeType type) {
  switch (type) {
    case MorphemeType::kPrefix: return "prefix";
    case MorphemeType::kSuffix: return "suffix";
    case MorphemeType::kStem: return "stem";
    case MorphemeType::kClitic: return "clitic";
  }
  return "stem";
}

std::string_view MorphemeTypeKey(MorphemeType type) {
  switch (type) {
    case MorphemeType::kPrefix: return "prefixes";
    case MorphemeType::kSuffix: return "suffixes";
    case MorphemeType::kStem: return "stems";
    case MorphemeType::kClitic: return "clitics";
  }
  return "stems";
}

std::optional<MorphemeType> ParseMorphemeTypeTag(std::string_view tag) {
  for (MorphemeType t : kAllMorphemeTypes) {
    if (MorphemeTypeTag(t) == tag) return t;
  }
  return std::nullopt;
}

std::optional<MorphemeType> ParseMorphemeTypeKey(std::string_view key) {
  for (MorphemeType t : kAllMorphemeTypes) {
    if (MorphemeTypeKey(t) == key) return t;
  }
  return std::nullopt;
}

const std::set<std::string>& MorphemeInventory::Section(
    MorphemeType type) const {
  auto it = sections.find(type);
  if (it == sections.end()) {
    throw Error(ErrorCode::kMissingInventory,
                "inventory has no '" + std::string(MorphemeTypeKey(type)) +
                    "' section");
  }
  return it->second;
}

void MorphemeInventory::AddSection(MorphemeType type,
                                   const std::vector<std::string>& entries,
                                   const NormalizationConfig& cfg) {
  std::set<std::string>& section = sections[type];
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string entry;
    try {
      entry = Normalize(entries[i], cfg);
    } catch (const Error& e) {
      throw Error(ErrorCode::kValidationError,
                  std::string(MorphemeTypeKey(type)) + ": " + e.detail(),
                  i + 1);
    }
    if (entry.find(cfg.continuation_marker) != std::string::npos) {
      throw Error(ErrorCode::kValidationError,
                  std::string(MorphemeTypeKey(type)) + ": entry '" + entry +
                      "' contains the continuation marker",
                  i + 1);
    }
    section.insert(std::move(entry));
  }
}

bool MorphemeFitsPosition(std::string_view word, std::string_view morpheme,
                          MorphemeType type) {
  if (morpheme.empty() || morpheme.size() > word.size()) return false;
  switch (type) {
    case MorphemeType::kPrefix:
      return word.substr(0, morpheme.size()) == morpheme;
    case MorphemeType::kSuffix:
    case MorphemeType::kClitic:
      return word.substr(word.size() - morpheme.size()) == morpheme;
    case MorphemeType::kStem:
      return word.find(morpheme) != std::string_view::npos;
  }
  return false;
}

CoherencePair CoherencePair::Make(std::string_view word,
                                  std::string_view morpheme, MorphemeType type,
                                  const NormalizationConfig& cfg,
                                  std::size_t row) {
  CoherencePair pair;
  pair.type = type;
  try {
    pair.word = Normalize(word, cfg);
    pair.morpheme = Normalize(morpheme, cfg);
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidationError, e.detail(), row);
  }
  if (pair.morpheme.find(cfg.continuation_marker) != std::string::npos) {
    throw Error(ErrorCode::kValidationError,
                "morpheme '" + pair.morpheme +
                    "' contains the continuation marker",
                row);
  }
  if (!MorphemeFitsPosition(pair.word, pair.morpheme, type)) {
    const char* where = type == MorphemeType::kPrefix ? "word-initial"
                        : IsWordFinal(type)           ? "word-final"
                                                      : "a substring";
    throw Error(ErrorCode::kValidationError,
                std::string(MorphemeTypeTag(type)) + " '" + pair.morpheme +
                    "' is not " + where + " in '" + pair.word + "'",
                row);
  }
  return pair;
}

void GoldSegmentations::Add(GoldEntry entry, std::size_t row) {
  if (entry.word.empty()) {
    throw Error(ErrorCode::kValidationError, "empty word", row);
  }
  if (entry.readings.empty()) {
    throw Error(ErrorCode::kValidationError,
                "word '" + entry.word + "' has no readings", row);
  }
  for (const GoldReading& reading : entry.readings) {
    if (reading.morphemes.empty()) {
      throw Error(ErrorCode::kValidationError,
                  "word '" + entry.word + "' reading " + reading.pos +
                      " has no morphemes",
                  row);
    }
    std::string joined;
    for (const std::string& m : reading.morphemes) {
      if (m.empty()) {
        throw Error(ErrorCode::kValidationError,
                    "word '" + entry.word + "' reading " + reading.pos +
                        " has an empty morpheme",
                    row);
      }
      joined += m;
    }
    if (joined != entry.word) {
      throw Error(ErrorCode::kValidationError,
                  "word '" + entry.word + "' reading " + reading.pos +
                      " concatenates to '" + joined + "'",
                  row);
    }
  }
  auto [it, inserted] = index_.emplace(entry.word, entries_.size());
  if (!inserted) {
    throw Error(ErrorCode::kValidationError,
                "word '" + entry.word + "' appears more than once", row);
  }
  entries_.push_back(std::move(entry));
}

const GoldEntry* GoldSegmentations::Find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<std::string> StrippedTokens(const Segmentation& seg,
                                        std::string_view marker) {
  std::vector<std::string> out;
  out.reserve(seg.tokens.size());
  for (std::size_t i = 0; i < seg.tokens.size(); ++i) {
    std::string_view t = seg.tokens[i];
    if (i > 0 && t.size() > marker.size() && StartsWith(t, marker)) {
      t.remove_prefix(marker.size());
    }
    out.emplace_back(t);
  }
  return out;
}

std::vector<Span> TokenSpans(const Segmentation& seg, std::string_view marker) {
  std::vector<Span> spans;
  spans.reserve(seg.tokens.size());
  std::size_t offset = 0;
  for (const std::string& surface : StrippedTokens(seg, marker)) {
    spans.push_back({offset, offset + surface.size()});
    offset += surface.size();
  }
  return spans;
}

bool IsWellFormed(const Segmentation& seg, const NormalizationConfig& cfg) {
  if (seg.tokens.empty()) return false;
  const std::string& marker = cfg.continuation_marker;
  if (seg.contains_unknown) {
    for (const std::string& t : seg.tokens) {
      if (t == cfg.unknown_token) return true;
    }
    return false;
  }
  if (StartsWith(seg.tokens[0], marker)) return false;
  std::string joined = seg.tokens[0];
  for (std::size_t i = 1; i < seg.tokens.size(); ++i) {
    const std::string& t = seg.tokens[i];
    if (t.size() <= marker.size() || !StartsWith(t, marker)) return false;
    joined.append(t, marker.size());
  }
  return joined == seg.word;
}

}  // namespace morpheval
