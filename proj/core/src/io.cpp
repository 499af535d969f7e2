#include "morpheval/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "morpheval/errors.hpp"

namespace morpheval {

using ordered_json = nlohmann::ordered_json;

std::string ReadFile(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kIoError, "input not found: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open: " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteFile(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write: " + path.string());
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::kIoError, "write failed: " + path.string());
  }
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

namespace {

void RequireUtf8Lines(const std::vector<std::string_view>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!IsValidUtf8(lines[i])) {
      throw Error(ErrorCode::kEncodingError, "invalid UTF-8", i + 1);
    }
  }
}

std::string_view StripCarriageReturn(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::size_t LineOfByte(std::string_view text, std::size_t byte) {
  if (byte > text.size()) byte = text.size();
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

ordered_json ParseJson(std::string_view text) {
  if (!IsValidUtf8(text)) {
    throw Error(ErrorCode::kEncodingError, "input is not valid UTF-8");
  }
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what(), LineOfByte(text, e.byte));
  }
}

std::vector<std::string> StringArray(const ordered_json& value,
                                     std::string_view what) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kParseError,
                std::string(what) + " must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      throw Error(ErrorCode::kParseError,
                  std::string(what) + " element is not a string", i + 1);
    }
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

std::string_view StripAffixHyphens(std::string_view morpheme) {
  while (morpheme.size() > 1 && morpheme.front() == '-') morpheme.remove_prefix(1);
  while (morpheme.size() > 1 && morpheme.back() == '-') morpheme.remove_suffix(1);
  return morpheme;
}

}  // namespace

Vocabulary LoadVocabulary(std::string_view bytes,
                          const NormalizationConfig& cfg) {
  if (bytes.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary, "vocabulary file is empty");
  }
  const std::vector<std::string_view> lines = SplitLines(bytes);
  RequireUtf8Lines(lines);
  std::vector<std::string> tokens(lines.begin(), lines.end());
  return Vocabulary(std::move(tokens), cfg.continuation_marker,
                    bytes.back() == '\n');
}

std::string WriteVocabulary(const Vocabulary& vocab) {
  std::string out;
  const auto& tokens = vocab.tokens();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += tokens[i];
    if (i + 1 < tokens.size() || vocab.trailing_newline()) out += '\n';
  }
  return out;
}

MergeTable LoadMergeTable(std::string_view bytes) {
  const std::vector<std::string_view> lines = SplitLines(bytes);
  RequireUtf8Lines(lines);
  MergeTable table;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = StripCarriageReturn(lines[i]);
    if (i == 0 && StartsWith(line, "#")) continue;
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos || space == 0 ||
        space + 1 == line.size() ||
        line.find(' ', space + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kParseError,
                  "expected 'LEFT RIGHT', got '" + std::string(line) + "'",
                  i + 1);
    }
    try {
      table.Append({std::string(line.substr(0, space)),
                    std::string(line.substr(space + 1))});
    } catch (const Error& e) {
      throw Error(e.code(), e.detail(), i + 1);
    }
  }
  return table;
}

std::string WriteMergeTable(const MergeTable& merges) {
  std::string out = "#version: 0.2\n";
  for (const MergeRule& rule : merges.rules()) {
    out += rule.left;
    out += ' ';
    out += rule.right;
    out += '\n';
  }
  return out;
}

MorphemeInventory LoadInventory(std::string_view json,
                                const NormalizationConfig& cfg) {
  const ordered_json doc = ParseJson(json);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "inventory must be a JSON object");
  }
  MorphemeInventory inventory;
  for (const auto& [key, value] : doc.items()) {
    const std::optional<MorphemeType> type = ParseMorphemeTypeKey(key);
    if (!type) {
      throw Error(ErrorCode::kUnknownType,
                  "unknown inventory section '" + key + "'");
    }
    inventory.AddSection(*type, StringArray(value, key), cfg);
  }
  return inventory;
}

std::vector<CoherencePair> LoadCoherencePairs(std::string_view tsv,
                                              const NormalizationConfig& cfg) {
  const std::vector<std::string_view> lines = SplitLines(tsv);
  RequireUtf8Lines(lines);
  std::vector<CoherencePair> pairs;
  pairs.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t row = i + 1;
    std::string_view line = StripCarriageReturn(lines[i]);
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string_view::npos
                                            ? std::string_view::npos
                                            : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  "expected 3 tab-separated columns, got " +
                      std::to_string(cols.size()),
                  row);
    }
    const std::optional<MorphemeType> type = ParseMorphemeTypeTag(cols[2]);
    if (!type) {
      throw Error(ErrorCode::kUnknownType,
                  "unknown morpheme type '" + std::string(cols[2]) + "'", row);
    }
    pairs.push_back(CoherencePair::Make(cols[0], StripAffixHyphens(cols[1]),
                                        *type, cfg, row));
  }
  return pairs;
}

GoldSegmentations LoadGoldSegmentations(std::string_view json,
                                        const NormalizationConfig& cfg) {
  const ordered_json doc = ParseJson(json);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError,
                "accuracy dataset must be a JSON object");
  }
  GoldSegmentations gold;
  std::size_t row = 0;
  for (const auto& [word, readings] : doc.items()) {
    ++row;
    if (!readings.is_object() || readings.empty()) {
      throw Error(ErrorCode::kParseError,
                  "word '" + word + "' must map to a non-empty object of "
                  "part-of-speech readings",
                  row);
    }
    GoldEntry entry;
    try {
      entry.word = Normalize(word, cfg);
      for (const auto& [pos, morphemes] : readings.items()) {
        GoldReading reading;
        reading.pos = pos;
        for (const std::string& m :
             StringArray(morphemes, "word '" + word + "' reading " + pos)) {
          reading.morphemes.push_back(Normalize(m, cfg));
        }
        entry.readings.push_back(std::move(reading));
      }
    } catch (const Error& e) {
      const ErrorCode code = e.code() == ErrorCode::kParseError
                                 ? ErrorCode::kParseError
                                 : ErrorCode::kValidationError;
      throw Error(code, e.detail(), row);
    }
    gold.Add(std::move(entry), row);
  }
  return gold;
}

}  // namespace morpheval
