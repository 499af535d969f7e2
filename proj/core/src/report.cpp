#include "morpheval/report.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>

#include "morpheval/digest.hpp"
#include "morpheval/errors.hpp"

namespace morpheval {

void RunManifest::AddInput(std::string role, std::string path,
                           std::string_view bytes) {
  inputs.push_back({std::move(role), std::move(path), Sha256Hex(bytes)});
}

std::string CurrentTimestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long value = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') now = static_cast<std::time_t>(value);
  }
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string_view ReportKind(const ReportBody& body) {
  struct Visitor {
    std::string_view operator()(const RelevanceReport&) const { return "relevance"; }
    std::string_view operator()(const CoherenceReport&) const { return "coherence"; }
    std::string_view operator()(const AccuracyReport&) const { return "accuracy"; }
    std::string_view operator()(const ErrorAnalysis&) const { return "errors"; }
    std::string_view operator()(const FingerprintComparison&) const { return "similarity"; }
    std::string_view operator()(const TrainSummary&) const { return "train"; }
    std::string_view operator()(const TokenizeResult&) const { return "tokenize"; }
  };
  return std::visit(Visitor{}, body);
}

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  throw Error(ErrorCode::kInvalidConfig,
              "unknown output format '" + std::string(name) + "'");
}

}  // namespace morpheval
