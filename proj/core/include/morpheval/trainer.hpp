#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "morpheval/unicode.hpp"

namespace morpheval {

struct TrainerConfig {
  std::size_t target_vocab_size = 0;
  std::uint64_t min_pair_frequency = 2;
  NormalizationConfig normalization;
  // Placed first in the vocabulary, in this order. Empty means
  // {normalization.unknown_token}.
  std::vector<std::string> special_tokens;
  // Workers for corpus counting. Output does not depend on this.
  int jobs = 1;

  std::vector<std::string> EffectiveSpecialTokens() const {
    if (special_tokens.empty()) return {normalization.unknown_token};
    return special_tokens;
  }
};

}  // namespace morpheval
