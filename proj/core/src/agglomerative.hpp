#pragma once

#include <string>
#include <vector>

#include "morpheval/merge_table.hpp"
#include "morpheval/pretokenize.hpp"
#include "morpheval/trainer.hpp"

namespace morpheval::detail {

enum class MergeCriterion { kFrequency, kLikelihood };

struct AgglomerativeResult {
  std::vector<std::string> tokens;
  std::vector<MergeRule> merges;
};

// Shared greedy pair-merging loop behind both trainers.
AgglomerativeResult TrainAgglomerative(const WordCounts& counts,
                                       const TrainerConfig& cfg,
                                       MergeCriterion criterion);

}  // namespace morpheval::detail
