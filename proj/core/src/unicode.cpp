#include "morpheval/unicode.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "morpheval/errors.hpp"

namespace morpheval {

std::string_view UnicodeFormName(UnicodeForm form) {
  switch (form) {
    case UnicodeForm::kNFC: return "NFC";
    case UnicodeForm::kNFD: return "NFD";
    case UnicodeForm::kNone: return "none";
  }
  return "none";
}

UnicodeForm ParseUnicodeForm(std::string_view name) {
  if (name == "NFC" || name == "nfc") return UnicodeForm::kNFC;
  if (name == "NFD" || name == "nfd") return UnicodeForm::kNFD;
  if (name == "none") return UnicodeForm::kNone;
  throw Error(ErrorCode::kInvalidConfig,
              "unknown unicode form '" + std::string(name) + "'");
}

void NormalizationConfig::Validate() const {
  if (continuation_marker.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "continuation marker is empty");
  }
  if (!IsValidUtf8(continuation_marker)) {
    throw Error(ErrorCode::kInvalidConfig, "continuation marker is not UTF-8");
  }
  std::size_t pos = 0;
  while (pos < continuation_marker.size()) {
    if (IsUnicodeWhitespace(NextCodepoint(continuation_marker, pos))) {
      throw Error(ErrorCode::kInvalidConfig,
                  "continuation marker contains whitespace");
    }
  }
  if (unknown_token.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "unknown token is empty");
  }
  if (unknown_token == continuation_marker) {
    throw Error(ErrorCode::kInvalidConfig,
                "unknown token equals the continuation marker");
  }
}

bool IsValidUtf8(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (NextCodepoint(text, pos) < 0) return false;
  }
  return true;
}

int NextCodepoint(std::string_view text, std::size_t& pos) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  auto i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(s, i, length, c);
  pos = static_cast<std::size_t>(i);
  return c;
}

std::vector<std::size_t> CodepointOffsets(std::string_view text) {
  std::vector<std::size_t> offsets;
  offsets.reserve(text.size() + 1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    offsets.push_back(pos);
    NextCodepoint(text, pos);
  }
  offsets.push_back(text.size());
  return offsets;
}

std::size_t CodepointCount(std::string_view text) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    NextCodepoint(text, pos);
    ++n;
  }
  return n;
}

bool IsUnicodeWhitespace(int cp) {
  return cp >= 0 && (u_isUWhiteSpace(cp) || cp == '\t' || cp == '\n' ||
                     cp == '\r' || cp == '\v' || cp == '\f');
}

bool IsPunctuation(int cp) {
  if (cp < 0) return false;
  if ((cp >= 33 && cp <= 47) || (cp >= 58 && cp <= 64) ||
      (cp >= 91 && cp <= 96) || (cp >= 123 && cp <= 126)) {
    return true;
  }
  return u_ispunct(cp);
}

bool StartsWith(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

namespace {

std::string_view Trim(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t next = begin;
    if (!IsUnicodeWhitespace(NextCodepoint(text, next))) break;
    begin = next;
  }
  std::size_t end = begin;
  std::size_t pos = begin;
  while (pos < text.size()) {
    if (!IsUnicodeWhitespace(NextCodepoint(text, pos))) end = pos;
  }
  return text.substr(begin, end - begin);
}

std::string ApplyOnce(const std::string& text, const NormalizationConfig& cfg) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(text);
  if (cfg.lowercase) u.toLower(icu::Locale::getRoot());
  if (cfg.unicode_form != UnicodeForm::kNone) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* normalizer =
        cfg.unicode_form == UnicodeForm::kNFC
            ? icu::Normalizer2::getNFCInstance(status)
            : icu::Normalizer2::getNFDInstance(status);
    if (U_FAILURE(status)) {
      throw Error(ErrorCode::kInvalidConfig, "ICU normalizer unavailable");
    }
    icu::UnicodeString normalized = normalizer->normalize(u, status);
    if (U_FAILURE(status)) {
      throw Error(ErrorCode::kEncodingError, "normalization failed");
    }
    u = normalized;
  }
  std::string out;
  u.toUTF8String(out);
  return out;
}

}  // namespace

std::string Normalize(std::string_view word, const NormalizationConfig& cfg) {
  if (!IsValidUtf8(word)) {
    throw Error(ErrorCode::kEncodingError, "input is not valid UTF-8");
  }
  const std::string_view trimmed = Trim(word);
  if (trimmed.empty()) {
    throw Error(ErrorCode::kEmptyInput, "word is empty after trimming");
  }
  // Casing and composition do not commute for a handful of code points, so
  // iterate to a fixed point.
  std::string current = ApplyOnce(std::string(trimmed), cfg);
  for (int round = 0; round < 4; ++round) {
    std::string next = ApplyOnce(current, cfg);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace morpheval
