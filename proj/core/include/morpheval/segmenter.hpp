#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morpheval/morphology.hpp"

namespace morpheval {

// Anything that turns a word into a Segmentation. Implementations must be
// pure and safe to call concurrently.
class Segmenter {
 public:
  virtual ~Segmenter() = default;
  virtual Segmentation Segment(std::string_view word) const = 0;
};

// Adapts a callable, mostly for tests and custom encoders.
class FunctionSegmenter final : public Segmenter {
 public:
  using Fn = std::function<Segmentation(std::string_view)>;

  explicit FunctionSegmenter(Fn fn) : fn_(std::move(fn)) {}
  Segmentation Segment(std::string_view word) const override { return fn_(word); }

 private:
  Fn fn_;
};

// Segments every word, preserving order. Failures are rethrown as
// BatchError carrying the lowest failing index.
std::vector<Segmentation> TokenizeBatch(const Segmenter& segmenter,
                                        std::span<const std::string> words,
                                        int jobs = 1);

}  // namespace morpheval
