#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morpheval {

using TokenId = std::int32_t;

// An ordered, duplicate-free token list. Ids are positions in the list.
// Immutable after construction and safe to share between threads.
class Vocabulary {
 public:
  // Throws Error(kDuplicateToken, row) on a repeated token,
  // Error(kValidationError, row) for an empty token or a bare marker, and
  // Error(kEmptyVocabulary) when `tokens` is empty.
  Vocabulary(std::vector<std::string> tokens, std::string marker,
             bool trailing_newline = true);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::string& marker() const noexcept { return marker_; }
  const std::string& token(TokenId id) const { return tokens_.at(id); }

  bool Contains(std::string_view token) const;
  std::optional<TokenId> Find(std::string_view token) const;

  bool IsContinuation(std::string_view token) const;
  // Surface of `token` with a leading marker removed.
  std::string_view StripMarker(std::string_view token) const;
  std::string Marked(std::string_view surface) const { return marker_ + std::string(surface); }

  // Longest marker-stripped token length in code points; bounds greedy
  // longest-match search.
  std::size_t max_surface_chars() const noexcept { return max_surface_chars_; }

  // Whether the source file ended in a newline; preserved so load + write
  // reproduces the file byte for byte.
  bool trailing_newline() const noexcept { return trailing_newline_; }

 private:
  std::vector<std::string> tokens_;
  std::string marker_;
  std::unordered_map<std::string, TokenId> by_surface_;
  std::size_t max_surface_chars_ = 0;
  bool trailing_newline_ = true;
};

}  // namespace morpheval
