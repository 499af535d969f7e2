#include "morpheval/vocabulary.hpp"

#include <algorithm>

#include "morpheval/errors.hpp"
#include "morpheval/unicode.hpp"

namespace morpheval {

Vocabulary::Vocabulary(std::vector<std::string> tokens, std::string marker,
                       bool trailing_newline)
    : tokens_(std::move(tokens)),
      marker_(std::move(marker)),
      trailing_newline_(trailing_newline) {
  if (tokens_.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary, "vocabulary has no tokens");
  }
  if (marker_.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "continuation marker is empty");
  }
  by_surface_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const std::string& token = tokens_[i];
    if (token.empty()) {
      throw Error(ErrorCode::kValidationError, "empty token", i + 1);
    }
    if (token == marker_) {
      throw Error(ErrorCode::kValidationError,
                  "token consists solely of the continuation marker", i + 1);
    }
    auto [it, inserted] =
        by_surface_.emplace(token, static_cast<TokenId>(i));
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateToken,
                  "duplicate token '" + token + "' (first at line " +
                      std::to_string(it->second + 1) + ")",
                  i + 1);
    }
    max_surface_chars_ =
        std::max(max_surface_chars_, CodepointCount(StripMarker(token)));
  }
}

bool Vocabulary::Contains(std::string_view token) const {
  return by_surface_.find(std::string(token)) != by_surface_.end();
}

std::optional<TokenId> Vocabulary::Find(std::string_view token) const {
  auto it = by_surface_.find(std::string(token));
  if (it == by_surface_.end()) return std::nullopt;
  return it->second;
}

bool Vocabulary::IsContinuation(std::string_view token) const {
  return token.size() > marker_.size() && StartsWith(token, marker_);
}

std::string_view Vocabulary::StripMarker(std::string_view token) const {
  if (IsContinuation(token)) token.remove_prefix(marker_.size());
  return token;
}

}  // namespace morpheval
