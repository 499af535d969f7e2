#include "morpheval/error_taxonomy.hpp"

#include <gtest/gtest.h>

#include "morpheval/io.hpp"
#include "morpheval/wordpiece.hpp"
#include "test_util.hpp"

namespace morpheval {
namespace {

using testing::Fixture;

class ErrorExamplesTest : public ::testing::Test {
 protected:
  ErrorExamplesTest()
      : vocab_(LoadVocabulary(Fixture("error_examples_vocab.txt"), cfg_)),
        gold_(LoadGoldSegmentations(Fixture("error_examples_gold.json"), cfg_)) {}

  ErrorClassification Classify(const std::string& word,
                               const std::vector<std::string>& expected_tokens) {
    const Segmentation out = EncodeWordpiece(word, vocab_, cfg_);
    EXPECT_EQ(out.tokens, expected_tokens) << word;
    return ClassifyError(*gold_.Find(word), out, vocab_, cfg_);
  }

  NormalizationConfig cfg_;
  Vocabulary vocab_;
  GoldSegmentations gold_;
};

TEST_F(ErrorExamplesTest, UnderSegmentation) {
  EXPECT_EQ(Classify("ambos", {"ambos"}).error, ErrorType::kUnderSegmentation);
  EXPECT_EQ(Classify("contar", {"contar"}).error, ErrorType::kUnderSegmentation);
}

TEST_F(ErrorExamplesTest, OverSegmentation) {
  EXPECT_EQ(Classify("néctar", {"n", "##éc", "##tar"}).error, ErrorType::kOverSegmentation);
  EXPECT_EQ(Classify("urbe", {"ur", "##be"}).error, ErrorType::kOverSegmentation);
}

TEST_F(ErrorExamplesTest, MorphemeAbsent) {
  const ErrorClassification deshago = Classify("deshago", {"desha", "##go"});
  EXPECT_EQ(deshago.error, ErrorType::kMorphemeAbsent);
  EXPECT_EQ(deshago.missing_morphemes, (std::vector<std::string>{"##hag"}));
  const ErrorClassification duerman = Classify("duerman", {"duerma", "##n"});
  EXPECT_EQ(duerman.error, ErrorType::kMorphemeAbsent);
  EXPECT_EQ(duerman.missing_morphemes, (std::vector<std::string>{"duerm"}));
}

TEST_F(ErrorExamplesTest, MorphemeNotSelected) {
  const ErrorClassification inventada = Classify("inventada", {"inventa", "##da"});
  EXPECT_EQ(inventada.error, ErrorType::kMorphemeNotSelected);
  EXPECT_TRUE(inventada.missing_morphemes.empty());
  EXPECT_EQ(Classify("decoraciones", {"decora", "##ciones"}).error,
            ErrorType::kMorphemeNotSelected);
}

TEST_F(ErrorExamplesTest, ProfileOverAllExamples) {
  const WordpieceEncoder encoder(std::make_shared<const Vocabulary>(vocab_), cfg_);
  const ErrorAnalysis analysis = AnalyzeErrors(encoder, gold_, vocab_, MetricsConfig{});
  EXPECT_EQ(analysis.profile.n_words, 8u);
  EXPECT_EQ(analysis.profile.n_correct, 0u);
  for (ErrorType t : kAllErrorTypes) EXPECT_EQ(analysis.profile.count(t), 2u);
  EXPECT_EQ(analysis.profile.total(), 8u);
  EXPECT_EQ(analysis.records.size(), 8u);
  EXPECT_EQ(analysis.records[0].word, "ambos");
  EXPECT_EQ(analysis.verdicts.size(), 8u);
}

TEST(ClassifyErrorTest, CorrectAgainstAnyReading) {
  const Vocabulary vocab({"baj", "##o", "bajo"}, "##");
  const GoldEntry gold{"bajo", {{"ADJ", {"baj", "o"}}, {"PREP", {"bajo"}}}};
  const ErrorClassification c =
      ClassifyError(gold, {"bajo", {"bajo"}, false}, vocab, NormalizationConfig{});
  EXPECT_FALSE(c.error.has_value());
  EXPECT_EQ(c.reading, 1u);
}

TEST(ClassifyErrorTest, UnknownOutputIsMorphemeAbsent) {
  const Vocabulary vocab({"[UNK]", "a"}, "##");
  const GoldEntry gold{"añ", {{"NOUN", {"a", "ñ"}}}};
  const ErrorClassification c =
      ClassifyError(gold, {"añ", {"[UNK]"}, true}, vocab, NormalizationConfig{});
  EXPECT_EQ(c.error, ErrorType::kMorphemeAbsent);
  EXPECT_EQ(c.missing_morphemes, (std::vector<std::string>{"##ñ"}));
}

TEST(ClassifyErrorTest, StructuralErrorsPrecedeLexical) {
  // "ambos" is under-segmented even though none of its gold morphemes exist.
  const Vocabulary vocab({"ambos"}, "##");
  const GoldEntry gold{"ambos", {{"DET", {"amb", "o", "s"}}}};
  EXPECT_EQ(ClassifyError(gold, {"ambos", {"ambos"}, false}, vocab, NormalizationConfig{}).error,
            ErrorType::kUnderSegmentation);
}

TEST(BestMatchingReadingTest, MostSharedSpansThenEarliest) {
  const GoldEntry gold{"abcd", {{"A", {"ab", "cd"}}, {"B", {"a", "b", "cd"}}, {"C", {"abc", "d"}}}};
  EXPECT_EQ(BestMatchingReading(gold, {"abcd", {"a", "##b", "##c", "##d"}, false}, "##"), 1u);
  EXPECT_EQ(BestMatchingReading(gold, {"abcd", {"abc", "##d"}, false}, "##"), 2u);
  EXPECT_EQ(BestMatchingReading(gold, {"abcd", {"abcd"}, false}, "##"), 0u);
}

TEST(AnalyzeErrorsTest, ToyProfile) {
  const auto vocab = std::make_shared<const Vocabulary>(
      std::vector<std::string>{"[UNK]", "casa", "##s", "cas", "##a", "mesas", "sol"}, "##");
  GoldSegmentations gold;
  gold.Add({"casas", {{"NOUN", {"cas", "a", "s"}}}});  // [casa, ##s]: Type 4
  gold.Add({"mesas", {{"NOUN", {"mes", "a", "s"}}}});  // [mesas]: Type 1
  gold.Add({"sol", {{"NOUN", {"sol"}}}});              // correct
  const WordpieceEncoder encoder(vocab, NormalizationConfig{});
  const ErrorAnalysis a = AnalyzeErrors(encoder, gold, *vocab, MetricsConfig{});
  EXPECT_EQ(a.profile.n_correct, 1u);
  EXPECT_EQ(a.profile.count(ErrorType::kUnderSegmentation), 1u);
  EXPECT_EQ(a.profile.count(ErrorType::kOverSegmentation), 0u);
  EXPECT_EQ(a.profile.count(ErrorType::kMorphemeAbsent), 0u);
  EXPECT_EQ(a.profile.count(ErrorType::kMorphemeNotSelected), 1u);
  EXPECT_EQ(a.profile.incorrect(), a.profile.total());
  EXPECT_FALSE(a.verdicts[2].error.has_value());
}

TEST(AnalyzeErrorsTest, OracleEncoderHasNoErrors) {
  const NormalizationConfig cfg;
  const GoldSegmentations gold =
      LoadGoldSegmentations(Fixture("error_examples_gold.json"), cfg);
  const Vocabulary vocab = LoadVocabulary(Fixture("error_examples_vocab.txt"), cfg);
  const FunctionSegmenter oracle([&](std::string_view w) {
    const GoldEntry* e = gold.Find(w);
    Segmentation seg{std::string(w), {}, false};
    for (std::size_t i = 0; i < e->readings[0].morphemes.size(); ++i) {
      seg.tokens.push_back((i ? "##" : "") + e->readings[0].morphemes[i]);
    }
    return seg;
  });
  const ErrorAnalysis a = AnalyzeErrors(oracle, gold, vocab, MetricsConfig{});
  EXPECT_EQ(a.profile.n_correct, gold.size());
  EXPECT_EQ(a.profile.total(), 0u);
  EXPECT_TRUE(a.records.empty());
}

TEST(ErrorTypeNamesTest, NamesAndLabels) {
  EXPECT_EQ(ErrorTypeName(ErrorType::kUnderSegmentation), "Type1");
  EXPECT_EQ(ErrorTypeName(ErrorType::kMorphemeNotSelected), "Type4");
  EXPECT_EQ(ErrorTypeLabel(ErrorType::kOverSegmentation), "over-segmentation");
}

}  // namespace
}  // namespace morpheval
