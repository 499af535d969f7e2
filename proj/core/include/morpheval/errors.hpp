#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace morpheval {

enum class ErrorCode {
  kEmptyInput,
  kEncodingError,
  kDuplicateToken,
  kEmptyVocabulary,
  kParseError,
  kValidationError,
  kUnknownType,
  kEmptyCorpus,
  kVocabTooSmall,
  kUnknownInWord,
  kMissingInventory,
  kEmptyComparison,
  kInvalidConfig,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception. `row()` is the 1-based
// line/row/array index the failure refers to, or 0 when not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::size_t row = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t row() const noexcept { return row_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::size_t row_;
  std::string detail_;
};

// Raised by batch operations; wraps the first (lowest-index) failure.
class BatchError : public Error {
 public:
  BatchError(const Error& cause, std::size_t index);

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace morpheval
