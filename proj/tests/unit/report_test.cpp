#include "morpheval/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

#include "morpheval/io.hpp"
#include "morpheval/wordpiece.hpp"
#include "test_util.hpp"

namespace morpheval {
namespace {

using testing::CodeOf;
using testing::Fixture;

RunManifest Manifest(const std::string& command) {
  RunManifest m;
  m.command = command;
  m.timestamp = "2024-01-01T00:00:00Z";
  m.AddInput("vocab", "vocab.txt", "casa\n");
  m.config = {{"marker", "##"}, {"lowercase", "true"}};
  return m;
}

RelevanceReport ToyRelevance() {
  const NormalizationConfig norm;
  return EvalRelevance(LoadVocabulary(Fixture("toy_vocab.txt"), norm),
                       LoadInventory(Fixture("toy_inventory.json"), norm), MetricsConfig{});
}

ErrorAnalysis ToyErrors() {
  const NormalizationConfig norm;
  const auto vocab = std::make_shared<const Vocabulary>(
      LoadVocabulary(Fixture("error_examples_vocab.txt"), norm));
  const GoldSegmentations gold =
      LoadGoldSegmentations(Fixture("error_examples_gold.json"), norm);
  return AnalyzeErrors(WordpieceEncoder(vocab, norm), gold, *vocab, MetricsConfig{});
}

std::vector<Report> AllKinds() {
  const NormalizationConfig norm;
  const auto vocab = std::make_shared<const Vocabulary>(
      LoadVocabulary(Fixture("toy_vocab.txt"), norm));
  const WordpieceEncoder encoder(vocab, norm);
  std::vector<Report> out;
  out.push_back({Manifest("eval-relevance"), ToyRelevance()});
  out.push_back({Manifest("eval-coherence"),
                 EvalCoherence(encoder, LoadCoherencePairs(Fixture("toy_pairs.tsv"), norm),
                               MetricsConfig{})});
  out.push_back({Manifest("eval-accuracy"),
                 EvalAccuracy(encoder,
                              LoadGoldSegmentations(Fixture("error_examples_gold.json"), norm),
                              MetricsConfig{})});
  out.push_back({Manifest("classify-errors"), ToyErrors()});
  out.push_back({Manifest("compare-vocabs"),
                 FingerprintComparison{"mono", "multi", "all-continuation",
                                       CompareTokenSets({"a", "b", "c"}, {"b", "c", "d"})}});
  out.push_back({Manifest("train"),
                 TrainSummary{"bpe", 100, 42, 30, 17, {{"vocab", "v.txt"}, {"merges", "m.txt"}}}});
  out.push_back({Manifest("tokenize"),
                 TokenizeResult{{encoder.Segment("casas"), encoder.Segment("ñu")}}});
  return out;
}

TEST(ReportKindTest, Names) {
  const std::vector<std::string> expected = {"relevance", "coherence", "accuracy", "errors",
                                             "similarity", "train", "tokenize"};
  const auto reports = AllKinds();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(ReportKind(reports[i].body), expected[i]);
  }
}

TEST(RenderTest, RelevanceTableLayout) {
  const std::string table = Render({Manifest("eval-relevance"), ToyRelevance()},
                                   OutputFormat::kTable);
  EXPECT_EQ(table,
            "Type      Total  Matched  Precision (%)  Recall (%)  F1 (%)\n"
            "prefixes      2        2          25.00      100.00   40.00\n"
            "suffixes      2        2          25.00      100.00   40.00\n"
            "stems         2        1          12.50       50.00   20.00\n");
}

TEST(RenderTest, RelevanceCsv) {
  const std::string csv = Render({Manifest("eval-relevance"), ToyRelevance()},
                                 OutputFormat::kCsv);
  EXPECT_EQ(csv,
            "Type,Total,Matched,Precision (%),Recall (%),F1 (%)\n"
            "prefixes,2,2,25.00,100.00,40.00\n"
            "suffixes,2,2,25.00,100.00,40.00\n"
            "stems,2,1,12.50,50.00,20.00\n");
}

TEST(RenderTest, CsvQuotesSpecialCells) {
  const Report r{Manifest("tokenize"), TokenizeResult{{{"a,b", {"a,b"}, false}}}};
  EXPECT_EQ(Render(r, OutputFormat::kCsv), "Word,Tokens,Unknown\n\"a,b\",\"a,b\",no\n");
}

TEST(RenderTest, ErrorProfileTable) {
  const std::string table = Render({Manifest("classify-errors"), ToyErrors()},
                                   OutputFormat::kTable);
  EXPECT_EQ(table,
            "Words  Correct  Type 1  Type 2  Type 3  Type 4  Total\n"
            "8            0       2       2       2       2      8\n");
}

TEST(RenderTest, SimilarityTable) {
  const Report r{Manifest("compare-vocabs"),
                 FingerprintComparison{"mono", "multi", "all-continuation",
                                       CompareTokenSets({"a", "b", "c"}, {"b", "c", "d"})}};
  EXPECT_EQ(Render(r, OutputFormat::kTable),
            "Comparison    |A|  |B|  |A & B|  Precision (%)  Recall (%)  F1 (%)\n"
            "mono - multi    3    3        2          66.67       66.67   66.67\n");
}

TEST(RenderTest, PureFunctionOfReport) {
  for (const Report& r : AllKinds()) {
    for (auto f : {OutputFormat::kJson, OutputFormat::kTable, OutputFormat::kCsv}) {
      EXPECT_EQ(Render(r, f), Render(r, f));
    }
  }
}

TEST(RenderTest, JsonRoundTripIsByteIdentical) {
  for (const Report& r : AllKinds()) {
    const std::string json = Render(r, OutputFormat::kJson);
    const Report parsed = ParseReportJson(json);
    EXPECT_EQ(Render(parsed, OutputFormat::kJson), json) << ReportKind(r.body);
    EXPECT_EQ(Render(parsed, OutputFormat::kTable), Render(r, OutputFormat::kTable));
    EXPECT_EQ(parsed.manifest.inputs, r.manifest.inputs);
  }
}

TEST(RenderTest, JsonCarriesManifestAndPercentages) {
  const std::string json = Render({Manifest("eval-relevance"), ToyRelevance()},
                                  OutputFormat::kJson);
  EXPECT_NE(json.find("\"report\": \"relevance\""), std::string::npos);
  EXPECT_NE(json.find("\"command\": \"eval-relevance\""), std::string::npos);
  EXPECT_NE(json.find("\"precision\": 12.5"), std::string::npos);
  // sha256("casa\n")
  EXPECT_NE(json.find("\"sha256\": \""), std::string::npos);
  EXPECT_EQ(json.back(), '\n');
}

TEST(RenderTest, CoherenceRowsSumToHundred) {
  const Report r = AllKinds()[1];
  const auto& rows = std::get<CoherenceReport>(r.body).rows;
  ASSERT_FALSE(rows.empty());
  for (const CoherenceRow& row : rows) {
    if (row.counts.evaluated() == 0) continue;
    const std::int64_t sum = row.counts.pct_single_token().hundredths +
                             row.counts.pct_recognized().hundredths +
                             row.counts.pct_not_recognized().hundredths;
    EXPECT_GE(sum, 9999);
    EXPECT_LE(sum, 10001);
  }
}

TEST(ParseReportJsonTest, MalformedInput) {
  EXPECT_EQ(CodeOf([] { ParseReportJson("{"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseReportJson("{\"report\": \"relevance\"}"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseReportJson("[]"); }), ErrorCode::kParseError);
}

TEST(ParseOutputFormatTest, Names) {
  EXPECT_EQ(ParseOutputFormat("json"), OutputFormat::kJson);
  EXPECT_EQ(ParseOutputFormat("table"), OutputFormat::kTable);
  EXPECT_EQ(ParseOutputFormat("csv"), OutputFormat::kCsv);
  EXPECT_EQ(CodeOf([] { ParseOutputFormat("xml"); }), ErrorCode::kInvalidConfig);
}

TEST(RenderExamplesTsvTest, OneLinePerWord) {
  const std::string tsv = RenderExamplesTsv(ToyErrors(), "##");
  const auto lines = SplitLines(tsv);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], "word\tgold\toutput\tverdict");
  EXPECT_EQ(lines[1], "ambos\t[amb, o, s]\t[ambos]\tType1 (under-segmentation)");
  EXPECT_EQ(lines[3], "néctar\t[néctar]\t[n, éc, tar]\tType2 (over-segmentation)");
  EXPECT_EQ(lines[5], "deshago\t[des, hag, o]\t[desha, go]\tType3 (morpheme absent)");
}

TEST(CurrentTimestampTest, HonoursSourceDateEpoch) {
  ::setenv("SOURCE_DATE_EPOCH", "0", 1);
  EXPECT_EQ(CurrentTimestamp(), "1970-01-01T00:00:00Z");
  ::unsetenv("SOURCE_DATE_EPOCH");
  EXPECT_EQ(CurrentTimestamp().size(), 20u);
}

}  // namespace
}  // namespace morpheval
