#include "morpheval/merge_table.hpp"

#include "morpheval/errors.hpp"
#include "morpheval/unicode.hpp"
#include "morpheval/vocabulary.hpp"

namespace morpheval {

MergeTable::MergeTable(std::vector<MergeRule> rules) {
  rules_.reserve(rules.size());
  for (MergeRule& rule : rules) Append(std::move(rule));
}

std::string MergeTable::Key(std::string_view left, std::string_view right) {
  std::string key;
  key.reserve(left.size() + right.size() + 1);
  key.append(left);
  key.push_back(' ');
  key.append(right);
  return key;
}

void MergeTable::Append(MergeRule rule) {
  if (rule.left.empty() || rule.right.empty()) {
    throw Error(ErrorCode::kValidationError, "merge rule with an empty side",
                rules_.size() + 1);
  }
  if (rule.left.find(' ') != std::string::npos ||
      rule.right.find(' ') != std::string::npos) {
    throw Error(ErrorCode::kValidationError, "merge token contains a space",
                rules_.size() + 1);
  }
  auto [it, inserted] = rank_.emplace(Key(rule.left, rule.right), rules_.size());
  if (!inserted) {
    throw Error(ErrorCode::kValidationError,
                "duplicate merge '" + rule.left + " " + rule.right + "'",
                rules_.size() + 1);
  }
  rules_.push_back(std::move(rule));
}

std::optional<std::size_t> MergeTable::Rank(std::string_view left,
                                             std::string_view right) const {
  auto it = rank_.find(Key(left, right));
  if (it == rank_.end()) return std::nullopt;
  return it->second;
}

std::string MergeTable::Product(std::string_view left, std::string_view right,
                                std::string_view marker) {
  std::string out(left);
  if (right.size() > marker.size() && StartsWith(right, marker)) {
    right.remove_prefix(marker.size());
  }
  out.append(right);
  return out;
}

void MergeTable::ValidateAgainst(const Vocabulary& vocab) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const std::string product =
        Product(rules_[i].left, rules_[i].right, vocab.marker());
    if (!vocab.Contains(product)) {
      throw Error(ErrorCode::kValidationError,
                  "merge product '" + product + "' is not in the vocabulary",
                  i + 1);
    }
  }
}

}  // namespace morpheval
