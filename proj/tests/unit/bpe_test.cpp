#include "morpheval/bpe.hpp"

#include <gtest/gtest.h>

#include "morpheval/io.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace morpheval {
namespace {

using testing::CodeOf;
using testing::MakeVocab;

TrainerConfig Config(std::size_t target, std::uint64_t min_frequency = 2) {
  TrainerConfig cfg;
  cfg.target_vocab_size = target;
  cfg.min_pair_frequency = min_frequency;
  return cfg;
}

TEST(TrainBpeTest, FirstMergeIsTheMostFrequentBigram) {
  // c·##a·##s·##a·##s twice: (##a,##s) occurs 4 times, (c,##a) twice.
  const BpeModel model = TrainBpe(std::vector<std::string>{"casas casas"}, Config(8));
  const auto reference = oracle::Train({{"casas", 2}}, 8, 2, {"[UNK]"}, "##", false);
  ASSERT_FALSE(model.merges.empty());
  EXPECT_EQ(model.merges[0], (MergeRule{"##a", "##s"}));
  ASSERT_EQ(model.merges.size(), reference.merges.size());
  for (std::size_t i = 0; i < reference.merges.size(); ++i) {
    EXPECT_EQ(model.merges[i].left, reference.merges[i].first);
    EXPECT_EQ(model.merges[i].right, reference.merges[i].second);
  }
  EXPECT_EQ(model.vocab.tokens(), reference.tokens);
  EXPECT_LE(model.vocab.size(), 8u);
}

TEST(TrainBpeTest, SinglePairCorpus) {
  const BpeModel model = TrainBpe(std::vector<std::string>{"ab"}, Config(10, 1));
  EXPECT_EQ(model.vocab.tokens(), (std::vector<std::string>{"[UNK]", "##b", "a", "ab"}));
  ASSERT_EQ(model.merges.size(), 1u);
  EXPECT_EQ(model.merges[0], (MergeRule{"a", "##b"}));
}

TEST(TrainBpeTest, MinimumFrequencyStopsTraining) {
  const BpeModel model = TrainBpe(std::vector<std::string>{"ab"}, Config(10, 2));
  EXPECT_TRUE(model.merges.empty());
  EXPECT_EQ(model.vocab.size(), 3u);
}

TEST(TrainBpeTest, RepeatedWordEndsUpWhole) {
  const BpeModel model =
      TrainBpe(std::vector<std::string>{"población población población"}, Config(1000));
  EXPECT_TRUE(model.vocab.Contains("población"));
  EXPECT_EQ(EncodeBpe("población", model.vocab, model.merges, NormalizationConfig{}).tokens,
            (std::vector<std::string>{"población"}));
}

TEST(TrainBpeTest, SpecialTokensComeFirst) {
  TrainerConfig cfg = Config(20);
  cfg.special_tokens = {"[PAD]", "[UNK]", "[CLS]"};
  const BpeModel model = TrainBpe(std::vector<std::string>{"casa casa"}, cfg);
  EXPECT_EQ(model.vocab.token(0), "[PAD]");
  EXPECT_EQ(model.vocab.token(2), "[CLS]");
}

TEST(TrainBpeTest, RejectsDegenerateInput) {
  EXPECT_EQ(CodeOf([] { TrainBpe(std::vector<std::string>{" ", ""}, Config(10)); }),
            ErrorCode::kEmptyCorpus);
  // [UNK] + c ##a ##s = 4 base tokens.
  EXPECT_EQ(CodeOf([] { TrainBpe(std::vector<std::string>{"casa"}, Config(4)); }),
            ErrorCode::kVocabTooSmall);
  EXPECT_EQ(CodeOf([] { TrainBpe(std::vector<std::string>{"casa"}, Config(10, 0)); }),
            ErrorCode::kInvalidConfig);
}

TEST(TrainBpeTest, MergesAreConsistentWithVocabulary) {
  const BpeModel model = TrainBpe(
      std::vector<std::string>{"las casas son grandes", "la casa es grande", "casitas"},
      Config(40));
  EXPECT_NO_THROW(model.merges.ValidateAgainst(model.vocab));
  const BpeModel reloaded{LoadVocabulary(WriteVocabulary(model.vocab), NormalizationConfig{}),
                          LoadMergeTable(WriteMergeTable(model.merges))};
  EXPECT_EQ(reloaded.vocab.tokens(), model.vocab.tokens());
  EXPECT_EQ(reloaded.merges.rules(), model.merges.rules());
}

TEST(EncodeBpeTest, ReplaysMergesInOrder) {
  const auto vocab = MakeVocab({"[UNK]", "c", "##a", "##s", "ca", "cas"});
  const MergeTable merges({{"c", "##a"}, {"ca", "##s"}});
  const Segmentation seg = EncodeBpe("casas", *vocab, merges, NormalizationConfig{});
  EXPECT_EQ(seg.tokens, (std::vector<std::string>{"cas", "##a", "##s"}));
  EXPECT_FALSE(seg.contains_unknown);
  EXPECT_EQ(seg.word, "casas");
}

TEST(EncodeBpeTest, SingleCharacter) {
  const auto vocab = MakeVocab({"a", "##b", "ab"});
  EXPECT_EQ(EncodeBpe("a", *vocab, MergeTable(std::vector<MergeRule>{{"a", "##b"}}), NormalizationConfig{}).tokens,
            (std::vector<std::string>{"a"}));
}

TEST(EncodeBpeTest, UnknownCharacterReplacesTheWord) {
  const auto vocab = MakeVocab({"[UNK]", "u", "##u", "n", "##ñ"});
  const Segmentation seg = EncodeBpe("ñu", *vocab, MergeTable{}, NormalizationConfig{});
  EXPECT_EQ(seg.tokens, (std::vector<std::string>{"[UNK]"}));
  EXPECT_TRUE(seg.contains_unknown);
}

TEST(EncodeBpeTest, NormalizesTheWord) {
  const auto vocab = MakeVocab({"c", "##a", "ca"});
  const Segmentation seg = EncodeBpe("CA", *vocab, MergeTable(std::vector<MergeRule>{{"c", "##a"}}), NormalizationConfig{});
  EXPECT_EQ(seg.word, "ca");
  EXPECT_EQ(seg.tokens, (std::vector<std::string>{"ca"}));
}

TEST(EncodeBpeTest, AppliesEachRuleLeftToRightInOnePass) {
  // ##a ##a ##a: the first pass merges the leftmost pair only.
  const auto vocab = MakeVocab({"b", "##a", "##aa"});
  const Segmentation seg =
      EncodeBpe("baaa", *vocab, MergeTable(std::vector<MergeRule>{{"##a", "##a"}}), NormalizationConfig{});
  EXPECT_EQ(seg.tokens, (std::vector<std::string>{"b", "##aa", "##a"}));
}

TEST(BpeEncoderTest, RejectsMismatchedMarker) {
  auto vocab = std::make_shared<const Vocabulary>(std::vector<std::string>{"a"}, "@@");
  EXPECT_EQ(CodeOf([&] {
              BpeEncoder(vocab, std::make_shared<const MergeTable>(), NormalizationConfig{});
            }),
            ErrorCode::kInvalidConfig);
}

TEST(TokenizeBatchTest, PreservesOrderAndPurity) {
  const BpeEncoder encoder(MakeVocab({"[UNK]", "c", "##a", "##s", "ca", "cas"}),
                           std::make_shared<const MergeTable>(
                               std::vector<MergeRule>{{"c", "##a"}, {"ca", "##s"}}),
                           NormalizationConfig{});
  EXPECT_TRUE(TokenizeBatch(encoder, std::vector<std::string>{}).empty());
  const std::vector<std::string> words = {"casas", "casas", "ca", "sac"};
  const auto out = TokenizeBatch(encoder, words, 3);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0].tokens, out[1].tokens);
  for (std::size_t i = 0; i < words.size(); ++i) {
    EXPECT_EQ(out[i].tokens, encoder.Segment(words[i]).tokens);
  }
}

TEST(TokenizeBatchTest, AttachesTheWordIndexToErrors) {
  const BpeEncoder encoder(MakeVocab({"a"}), std::make_shared<const MergeTable>(),
                           NormalizationConfig{});
  const std::vector<std::string> words = {"a", "a", " ", "a", ""};
  try {
    TokenizeBatch(encoder, words, 2);
    FAIL();
  } catch (const BatchError& e) {
    EXPECT_EQ(e.index(), 2u);
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

}  // namespace
}  // namespace morpheval
