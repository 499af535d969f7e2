#include "morpheval/errors.hpp"

namespace morpheval {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kEncodingError: return "EncodingError";
    case ErrorCode::kDuplicateToken: return "DuplicateToken";
    case ErrorCode::kEmptyVocabulary: return "EmptyVocabulary";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kUnknownType: return "UnknownType";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kVocabTooSmall: return "VocabTooSmall";
    case ErrorCode::kUnknownInWord: return "UnknownInWord";
    case ErrorCode::kMissingInventory: return "MissingInventory";
    case ErrorCode::kEmptyComparison: return "EmptyComparison";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string Compose(ErrorCode code, const std::string& message,
                    std::size_t row) {
  std::string out(ErrorCodeName(code));
  if (row != 0) out += "(" + std::to_string(row) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, std::size_t row)
    : std::runtime_error(Compose(code, message, row)),
      code_(code),
      row_(row),
      detail_(std::move(message)) {}

BatchError::BatchError(const Error& cause, std::size_t index)
    : Error(cause.code(),
            "word #" + std::to_string(index) + ": " + cause.detail(),
            cause.row()),
      index_(index) {}

}  // namespace morpheval
