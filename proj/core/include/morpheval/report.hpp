#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "morpheval/error_taxonomy.hpp"
#include "morpheval/fingerprint.hpp"
#include "morpheval/metrics.hpp"
#include "morpheval/morphology.hpp"

namespace morpheval {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct InputDigest {
  std::string role;  // "vocab", "gold", ...
  std::string path;
  std::string sha256;

  bool operator==(const InputDigest&) const = default;
};

struct RunManifest {
  std::string command;
  std::vector<InputDigest> inputs;
  // Ordered snapshot of every setting that affects the body.
  std::vector<std::pair<std::string, std::string>> config;
  std::string tool_version = std::string(kToolVersion);
  std::string timestamp;

  // Digests `bytes` and records it under `role`.
  void AddInput(std::string role, std::string path, std::string_view bytes);
};

// UTC ISO-8601 time; honours SOURCE_DATE_EPOCH for reproducible builds.
std::string CurrentTimestamp();

struct TrainSummary {
  std::string algorithm;
  std::uint64_t target_vocab_size = 0;
  std::uint64_t vocab_size = 0;
  std::uint64_t merges = 0;
  std::uint64_t distinct_words = 0;
  std::vector<std::pair<std::string, std::string>> outputs;  // role -> path
};

struct TokenizeResult {
  std::vector<Segmentation> segmentations;
};

struct FingerprintComparison {
  std::string label_a;
  std::string label_b;
  std::string strategy;
  SimilarityReport similarity;
};

using ReportBody =
    std::variant<RelevanceReport, CoherenceReport, AccuracyReport,
                 ErrorAnalysis, FingerprintComparison, TrainSummary,
                 TokenizeResult>;

struct Report {
  RunManifest manifest;
  ReportBody body;
};

// "relevance", "coherence", "accuracy", "errors", "similarity", "train",
// "tokenize".
std::string_view ReportKind(const ReportBody& body);

enum class OutputFormat { kJson, kTable, kCsv };

OutputFormat ParseOutputFormat(std::string_view name);

// JSON is canonical (manifest + body). Tables mirror the published column
// layouts with percentages to two decimals; CSV carries the same columns.
// Output is a pure function of the report.
std::string Render(const Report& report, OutputFormat format);

// Inverse of Render(kJson): parsing and re-rendering reproduces the bytes.
// Throws Error(kParseError) on malformed input.
Report ParseReportJson(std::string_view json);

// Qualitative per-word view: word, gold, output, verdict (TSV with header).
std::string RenderExamplesTsv(const ErrorAnalysis& analysis,
                              std::string_view marker);

}  // namespace morpheval
