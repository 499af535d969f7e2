#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morpheval {

class Vocabulary;

struct MergeRule {
  std::string left;
  std::string right;

  bool operator==(const MergeRule&) const = default;
};

// Ranked BPE merge rules; index 0 has the highest priority.
class MergeTable {
 public:
  MergeTable() = default;
  explicit MergeTable(std::vector<MergeRule> rules);

  // Throws Error(kValidationError) for a repeated pair or a token that
  // contains a space (the file format separator).
  void Append(MergeRule rule);

  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  const std::vector<MergeRule>& rules() const noexcept { return rules_; }
  const MergeRule& operator[](std::size_t i) const { return rules_[i]; }

  std::optional<std::size_t> Rank(std::string_view left,
                                   std::string_view right) const;

  // Checks that every rule's product is a vocabulary token.
  void ValidateAgainst(const Vocabulary& vocab) const;

  // Token formed by merging `left` with `right`: the right side loses its
  // continuation marker.
  static std::string Product(std::string_view left, std::string_view right,
                             std::string_view marker);

 private:
  static std::string Key(std::string_view left, std::string_view right);

  std::vector<MergeRule> rules_;
  std::unordered_map<std::string, std::size_t> rank_;
};

}  // namespace morpheval
