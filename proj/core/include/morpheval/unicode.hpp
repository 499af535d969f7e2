#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace morpheval {

enum class UnicodeForm { kNFC, kNFD, kNone };

std::string_view UnicodeFormName(UnicodeForm form);
UnicodeForm ParseUnicodeForm(std::string_view name);

// Text conventions shared by every component. Vocabulary files are never
// rewritten with these settings; they apply to evaluated words and dataset
// entries only.
struct NormalizationConfig {
  bool lowercase = true;
  UnicodeForm unicode_form = UnicodeForm::kNFC;
  std::string continuation_marker = "##";
  std::string unknown_token = "[UNK]";

  // Throws Error(kInvalidConfig) when the marker is empty, contains
  // whitespace, or collides with the unknown token.
  void Validate() const;

  bool operator==(const NormalizationConfig&) const = default;
};

// Trims surrounding whitespace, lowercases and applies the configured Unicode
// normal form. Idempotent. Throws Error(kEmptyInput) for blank input and
// Error(kEncodingError) for invalid UTF-8.
std::string Normalize(std::string_view word, const NormalizationConfig& cfg);

bool IsValidUtf8(std::string_view text);

// Byte offsets of every code point start, plus a trailing text.size().
// Requires valid UTF-8.
std::vector<std::size_t> CodepointOffsets(std::string_view text);

std::size_t CodepointCount(std::string_view text);

// Decodes one code point at `pos`, advancing it. Returns -1 on malformed
// input.
int NextCodepoint(std::string_view text, std::size_t& pos);

bool IsUnicodeWhitespace(int cp);

// Unicode punctuation (general category P*) plus the ASCII symbol range, the
// same split point word-level BERT-style pre-tokenizers use.
bool IsPunctuation(int cp);

bool StartsWith(std::string_view text, std::string_view prefix);

}  // namespace morpheval
