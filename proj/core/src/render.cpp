#include <algorithm>
#include <optional>

#include <json.hpp>

#include "morpheval/errors.hpp"
#include "morpheval/report.hpp"
#include "morpheval/unicode.hpp"

namespace morpheval {

using ordered_json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Plain-text and CSV tables

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> headers)
      : headers_(std::move(headers)) {}

  void AddRow(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  // First column left-aligned, the rest right-aligned; two-space gutters.
  std::string Text() const {
    std::vector<std::size_t> width(headers_.size(), 0);
    for (std::size_t c = 0; c < headers_.size(); ++c) {
      width[c] = CodepointCount(headers_[c]);
      for (const auto& row : rows_) {
        width[c] = std::max(width[c], CodepointCount(row[c]));
      }
    }
    std::string out;
    auto emit = [&](const std::vector<std::string>& cells) {
      std::string line;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::string pad(width[c] - CodepointCount(cells[c]), ' ');
        if (c > 0) line += "  ";
        line += c == 0 ? cells[c] + pad : pad + cells[c];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    };
    emit(headers_);
    for (const auto& row : rows_) emit(row);
    return out;
  }

  std::string Csv() const {
    std::string out;
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) out += ',';
        out += CsvField(cells[c]);
      }
      out += '\n';
    };
    emit(headers_);
    for (const auto& row : rows_) emit(row);
    return out;
  }

 private:
  static std::string CsvField(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char ch : cell) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    quoted += '"';
    return quoted;
  }

  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

std::string JoinBracketed(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  out += "]";
  return out;
}

std::string JoinSpaced(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ' ';
    out += items[i];
  }
  return out;
}

std::string CoherenceRowName(const CoherenceRow& row) {
  return row.type ? std::string(MorphemeTypeTag(*row.type)) : "overall";
}

TextTable BuildTable(const ReportBody& body) {
  if (const auto* r = std::get_if<RelevanceReport>(&body)) {
    TextTable t({"Type", "Total", "Matched", "Precision (%)", "Recall (%)", "F1 (%)"});
    for (const RelevanceRow& row : r->rows) {
      t.AddRow({std::string(MorphemeTypeKey(row.type)),
                std::to_string(row.inventory_size),
                std::to_string(row.matched.size()), row.precision().str(),
                row.recall().str(), row.f1().str()});
    }
    return t;
  }
  if (const auto* r = std::get_if<CoherenceReport>(&body)) {
    TextTable t({"Morpheme type", "Total", "Evaluated", "Single token (%)",
                 "Morpheme recognized (%)", "Morpheme not recognized (%)",
                 "Excluded (unknown)"});
    for (const CoherenceRow& row : r->rows) {
      const CoherenceCounts& c = row.counts;
      t.AddRow({CoherenceRowName(row), std::to_string(c.total()),
                std::to_string(c.evaluated()), c.pct_single_token().str(),
                c.pct_recognized().str(), c.pct_not_recognized().str(),
                std::to_string(c.excluded_unknown)});
    }
    return t;
  }
  if (const auto* r = std::get_if<AccuracyReport>(&body)) {
    TextTable t({"Words", "Correct", "Accuracy (%)", "Mean of tokens per word"});
    t.AddRow({std::to_string(r->n_words), std::to_string(r->n_correct),
              r->accuracy().str(), r->mean_tokens_per_word().str()});
    return t;
  }
  if (const auto* r = std::get_if<ErrorAnalysis>(&body)) {
    const ErrorProfile& p = r->profile;
    TextTable t({"Words", "Correct", "Type 1", "Type 2", "Type 3", "Type 4",
                 "Total"});
    t.AddRow({std::to_string(p.n_words), std::to_string(p.n_correct),
              std::to_string(p.counts[0]), std::to_string(p.counts[1]),
              std::to_string(p.counts[2]), std::to_string(p.counts[3]),
              std::to_string(p.total())});
    return t;
  }
  if (const auto* r = std::get_if<FingerprintComparison>(&body)) {
    TextTable t({"Comparison", "|A|", "|B|", "|A & B|", "Precision (%)",
                 "Recall (%)", "F1 (%)"});
    const SimilarityReport& s = r->similarity;
    t.AddRow({r->label_a + " - " + r->label_b, std::to_string(s.set_a_size),
              std::to_string(s.set_b_size), std::to_string(s.intersection_size),
              s.precision().str(), s.recall().str(), s.f1().str()});
    return t;
  }
  if (const auto* r = std::get_if<TrainSummary>(&body)) {
    TextTable t({"Algorithm", "Target size", "Vocabulary size", "Merges",
                 "Distinct words"});
    t.AddRow({r->algorithm, std::to_string(r->target_vocab_size),
              std::to_string(r->vocab_size), std::to_string(r->merges),
              std::to_string(r->distinct_words)});
    return t;
  }
  const auto& r = std::get<TokenizeResult>(body);
  TextTable t({"Word", "Tokens", "Unknown"});
  for (const Segmentation& s : r.segmentations) {
    t.AddRow({s.word, JoinSpaced(s.tokens), s.contains_unknown ? "yes" : "no"});
  }
  return t;
}

// ---------------------------------------------------------------------------
// JSON

ordered_json SegmentationJson(const Segmentation& s) {
  ordered_json j;
  j["word"] = s.word;
  j["tokens"] = s.tokens;
  j["contains_unknown"] = s.contains_unknown;
  return j;
}

Segmentation SegmentationFromJson(const ordered_json& j) {
  return {j.at("word").get<std::string>(),
          j.at("tokens").get<std::vector<std::string>>(),
          j.at("contains_unknown").get<bool>()};
}

ordered_json BodyJson(const ReportBody& body) {
  ordered_json j;
  if (const auto* r = std::get_if<RelevanceReport>(&body)) {
    j["vocab_size"] = r->vocab_size;
    j["rows"] = ordered_json::array();
    for (const RelevanceRow& row : r->rows) {
      ordered_json jr;
      jr["type"] = MorphemeTypeKey(row.type);
      jr["total"] = row.inventory_size;
      jr["vocab_size"] = row.vocab_size;
      jr["matched_count"] = row.matched.size();
      jr["precision"] = row.precision().value();
      jr["recall"] = row.recall().value();
      jr["f1"] = row.f1().value();
      jr["matched"] = row.matched;
      j["rows"].push_back(std::move(jr));
    }
    j["notes"] = r->notes;
  } else if (const auto* r = std::get_if<CoherenceReport>(&body)) {
    j["rows"] = ordered_json::array();
    for (const CoherenceRow& row : r->rows) {
      const CoherenceCounts& c = row.counts;
      ordered_json jr;
      jr["type"] = CoherenceRowName(row);
      jr["total"] = c.total();
      jr["evaluated"] = c.evaluated();
      jr["excluded_unknown"] = c.excluded_unknown;
      jr["single_token"] = c.single_token;
      jr["recognized"] = c.recognized;
      jr["not_recognized"] = c.not_recognized;
      jr["pct_single_token"] = c.pct_single_token().value();
      jr["pct_recognized"] = c.pct_recognized().value();
      jr["pct_not_recognized"] = c.pct_not_recognized().value();
      j["rows"].push_back(std::move(jr));
    }
  } else if (const auto* r = std::get_if<AccuracyReport>(&body)) {
    j["n_words"] = r->n_words;
    j["n_correct"] = r->n_correct;
    j["accuracy"] = r->accuracy().value();
    j["total_tokens"] = r->total_tokens;
    j["mean_tokens_per_word"] = r->mean_tokens_per_word().value();
    j["per_word"] = ordered_json::array();
    for (const AccuracyItem& item : r->per_word) {
      ordered_json ji = SegmentationJson(item.output);
      ji["word"] = item.word;
      ji["correct"] = item.matched_reading.has_value();
      ji["matched_reading"] = item.matched_reading
                                  ? ordered_json(*item.matched_reading)
                                  : ordered_json(nullptr);
      j["per_word"].push_back(std::move(ji));
    }
  } else if (const auto* r = std::get_if<ErrorAnalysis>(&body)) {
    const ErrorProfile& p = r->profile;
    ordered_json jp;
    jp["n_words"] = p.n_words;
    jp["n_correct"] = p.n_correct;
    jp["incorrect"] = p.incorrect();
    for (ErrorType t : kAllErrorTypes) jp[std::string(ErrorTypeName(t))] = p.count(t);
    jp["total"] = p.total();
    jp["consistent"] = p.total() == p.incorrect();
    j["profile"] = std::move(jp);
    j["records"] = ordered_json::array();
    for (const ErrorRecord& rec : r->records) {
      ordered_json jr;
      jr["word"] = rec.word;
      jr["type"] = ErrorTypeName(rec.type);
      jr["gold_pos"] = rec.gold_reading.pos;
      jr["gold"] = rec.gold_reading.morphemes;
      jr["tokens"] = rec.output.tokens;
      jr["contains_unknown"] = rec.output.contains_unknown;
      jr["missing"] = rec.missing_morphemes;
      j["records"].push_back(std::move(jr));
    }
  } else if (const auto* r = std::get_if<FingerprintComparison>(&body)) {
    const SimilarityReport& s = r->similarity;
    j["label_a"] = r->label_a;
    j["label_b"] = r->label_b;
    j["strategy"] = r->strategy;
    j["set_a_size"] = s.set_a_size;
    j["set_b_size"] = s.set_b_size;
    j["intersection_size"] = s.intersection_size;
    j["precision"] = s.precision().value();
    j["recall"] = s.recall().value();
    j["f1"] = s.f1().value();
  } else if (const auto* r = std::get_if<TrainSummary>(&body)) {
    j["algorithm"] = r->algorithm;
    j["target_vocab_size"] = r->target_vocab_size;
    j["vocab_size"] = r->vocab_size;
    j["merges"] = r->merges;
    j["distinct_words"] = r->distinct_words;
    j["outputs"] = ordered_json::object();
    for (const auto& [role, path] : r->outputs) j["outputs"][role] = path;
  } else {
    const auto& tr = std::get<TokenizeResult>(body);
    j["segmentations"] = ordered_json::array();
    for (const Segmentation& s : tr.segmentations) {
      j["segmentations"].push_back(SegmentationJson(s));
    }
  }
  return j;
}

ordered_json ManifestJson(const RunManifest& m) {
  ordered_json j;
  j["command"] = m.command;
  j["tool_version"] = m.tool_version;
  j["timestamp"] = m.timestamp;
  j["inputs"] = ordered_json::array();
  for (const InputDigest& in : m.inputs) {
    j["inputs"].push_back({{"role", in.role}, {"path", in.path}, {"sha256", in.sha256}});
  }
  j["config"] = ordered_json::object();
  for (const auto& [k, v] : m.config) j["config"][k] = v;
  return j;
}

RunManifest ManifestFromJson(const ordered_json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.timestamp = j.at("timestamp").get<std::string>();
  for (const auto& in : j.at("inputs")) {
    m.inputs.push_back({in.at("role").get<std::string>(),
                        in.at("path").get<std::string>(),
                        in.at("sha256").get<std::string>()});
  }
  for (const auto& [k, v] : j.at("config").items()) {
    m.config.emplace_back(k, v.get<std::string>());
  }
  return m;
}

MorphemeType TypeFromKey(const std::string& key) {
  if (auto t = ParseMorphemeTypeKey(key)) return *t;
  throw Error(ErrorCode::kParseError, "unknown morpheme type '" + key + "'");
}

ErrorType ErrorTypeFromName(const std::string& name) {
  for (ErrorType t : kAllErrorTypes) {
    if (ErrorTypeName(t) == name) return t;
  }
  throw Error(ErrorCode::kParseError, "unknown error type '" + name + "'");
}

ReportBody BodyFromJson(std::string_view kind, const ordered_json& j) {
  if (kind == "relevance") {
    RelevanceReport r;
    r.vocab_size = j.at("vocab_size").get<std::uint64_t>();
    for (const auto& jr : j.at("rows")) {
      RelevanceRow row;
      row.type = TypeFromKey(jr.at("type").get<std::string>());
      row.inventory_size = jr.at("total").get<std::uint64_t>();
      row.vocab_size = jr.at("vocab_size").get<std::uint64_t>();
      row.matched = jr.at("matched").get<std::vector<std::string>>();
      r.rows.push_back(std::move(row));
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  }
  if (kind == "coherence") {
    CoherenceReport r;
    for (const auto& jr : j.at("rows")) {
      CoherenceRow row;
      const std::string type = jr.at("type").get<std::string>();
      if (type != "overall") {
        row.type = ParseMorphemeTypeTag(type);
        if (!row.type) {
          throw Error(ErrorCode::kParseError, "unknown row type '" + type + "'");
        }
      }
      row.counts.single_token = jr.at("single_token").get<std::uint64_t>();
      row.counts.recognized = jr.at("recognized").get<std::uint64_t>();
      row.counts.not_recognized = jr.at("not_recognized").get<std::uint64_t>();
      row.counts.excluded_unknown = jr.at("excluded_unknown").get<std::uint64_t>();
      r.rows.push_back(row);
    }
    return r;
  }
  if (kind == "accuracy") {
    AccuracyReport r;
    r.n_words = j.at("n_words").get<std::uint64_t>();
    r.n_correct = j.at("n_correct").get<std::uint64_t>();
    r.total_tokens = j.at("total_tokens").get<std::uint64_t>();
    for (const auto& ji : j.at("per_word")) {
      AccuracyItem item;
      item.word = ji.at("word").get<std::string>();
      item.output = SegmentationFromJson(ji);
      if (!ji.at("matched_reading").is_null()) {
        item.matched_reading = ji.at("matched_reading").get<std::size_t>();
      }
      r.per_word.push_back(std::move(item));
    }
    return r;
  }
  if (kind == "errors") {
    ErrorAnalysis r;
    const auto& jp = j.at("profile");
    r.profile.n_words = jp.at("n_words").get<std::uint64_t>();
    r.profile.n_correct = jp.at("n_correct").get<std::uint64_t>();
    for (ErrorType t : kAllErrorTypes) {
      r.profile.counts[static_cast<std::size_t>(t) - 1] =
          jp.at(std::string(ErrorTypeName(t))).get<std::uint64_t>();
    }
    for (const auto& jr : j.at("records")) {
      ErrorRecord rec;
      rec.word = jr.at("word").get<std::string>();
      rec.type = ErrorTypeFromName(jr.at("type").get<std::string>());
      rec.gold_reading.pos = jr.at("gold_pos").get<std::string>();
      rec.gold_reading.morphemes = jr.at("gold").get<std::vector<std::string>>();
      rec.output.word = rec.word;
      rec.output.tokens = jr.at("tokens").get<std::vector<std::string>>();
      rec.output.contains_unknown = jr.at("contains_unknown").get<bool>();
      rec.missing_morphemes = jr.at("missing").get<std::vector<std::string>>();
      r.records.push_back(std::move(rec));
    }
    return r;
  }
  if (kind == "similarity") {
    FingerprintComparison r;
    r.label_a = j.at("label_a").get<std::string>();
    r.label_b = j.at("label_b").get<std::string>();
    r.strategy = j.at("strategy").get<std::string>();
    r.similarity.set_a_size = j.at("set_a_size").get<std::uint64_t>();
    r.similarity.set_b_size = j.at("set_b_size").get<std::uint64_t>();
    r.similarity.intersection_size = j.at("intersection_size").get<std::uint64_t>();
    return r;
  }
  if (kind == "train") {
    TrainSummary r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.target_vocab_size = j.at("target_vocab_size").get<std::uint64_t>();
    r.vocab_size = j.at("vocab_size").get<std::uint64_t>();
    r.merges = j.at("merges").get<std::uint64_t>();
    r.distinct_words = j.at("distinct_words").get<std::uint64_t>();
    for (const auto& [role, path] : j.at("outputs").items()) {
      r.outputs.emplace_back(role, path.get<std::string>());
    }
    return r;
  }
  if (kind == "tokenize") {
    TokenizeResult r;
    for (const auto& js : j.at("segmentations")) {
      r.segmentations.push_back(SegmentationFromJson(js));
    }
    return r;
  }
  throw Error(ErrorCode::kParseError, "unknown report kind '" + std::string(kind) + "'");
}

}  // namespace

std::string Render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      ordered_json j;
      j["report"] = ReportKind(report.body);
      j["manifest"] = ManifestJson(report.manifest);
      j["body"] = BodyJson(report.body);
      return j.dump(2) + "\n";
    }
    case OutputFormat::kTable:
      return BuildTable(report.body).Text();
    case OutputFormat::kCsv:
      return BuildTable(report.body).Csv();
  }
  return {};
}

Report ParseReportJson(std::string_view json) {
  try {
    const ordered_json j = ordered_json::parse(json.begin(), json.end());
    const std::string kind = j.at("report").get<std::string>();
    return {ManifestFromJson(j.at("manifest")), BodyFromJson(kind, j.at("body"))};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed report: ") + e.what());
  }
}

std::string RenderExamplesTsv(const ErrorAnalysis& analysis,
                              std::string_view marker) {
  std::string out = "word\tgold\toutput\tverdict\n";
  for (const WordVerdict& v : analysis.verdicts) {
    out += v.word;
    out += '\t';
    out += JoinBracketed(v.gold_reading.morphemes);
    out += '\t';
    out += JoinBracketed(v.output.contains_unknown ? v.output.tokens
                                                   : StrippedTokens(v.output, marker));
    out += '\t';
    if (v.error) {
      out += ErrorTypeName(*v.error);
      out += " (";
      out += ErrorTypeLabel(*v.error);
      out += ")";
    } else {
      out += "correct";
    }
    out += '\n';
  }
  return out;
}

}  // namespace morpheval
