#include "morpheval/fingerprint.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace morpheval {
namespace {

using testing::CodeOf;

MorphemeInventory Prefixes(const std::vector<std::string>& entries) {
  MorphemeInventory inv;
  inv.AddSection(MorphemeType::kPrefix, entries, NormalizationConfig{});
  return inv;
}

TEST(ExtractCharacteristicSetTest, Strategies) {
  const Vocabulary vocab({"des", "re", "##s", "casa"}, "##");
  const MorphemeInventory inv = Prefixes({"des", "re", "in"});
  EXPECT_EQ(ExtractCharacteristicSet(vocab, inv, CharacteristicStrategy::kInventoryPrefixes),
            (std::set<std::string>{"des", "re"}));
  EXPECT_EQ(ExtractCharacteristicSet(vocab, inv, CharacteristicStrategy::kAllContinuation),
            (std::set<std::string>{"##s"}));
  EXPECT_EQ(ExtractCharacteristicSet(vocab, inv, CharacteristicStrategy::kAllWordInitial),
            (std::set<std::string>{"casa", "des", "re"}));
  EXPECT_TRUE(ExtractCharacteristicSet(vocab, Prefixes({"in"}),
                                       CharacteristicStrategy::kInventoryPrefixes)
                  .empty());
}

TEST(ExtractCharacteristicSetTest, SuffixStrategyUsesMarkedForms) {
  const Vocabulary vocab({"s", "##ción", "casa"}, "##");
  MorphemeInventory inv;
  inv.AddSection(MorphemeType::kSuffix, {"ción", "s"}, NormalizationConfig{});
  EXPECT_EQ(ExtractCharacteristicSet(vocab, inv, CharacteristicStrategy::kInventorySuffixes),
            (std::set<std::string>{"ción"}));
}

TEST(ExtractCharacteristicSetTest, MissingSectionIsAnError) {
  const Vocabulary vocab({"des"}, "##");
  EXPECT_EQ(CodeOf([&] {
              ExtractCharacteristicSet(vocab, Prefixes({"des"}),
                                       CharacteristicStrategy::kInventorySuffixes);
            }),
            ErrorCode::kMissingInventory);
}

TEST(CompareTokenSetsTest, IdenticalAndDisjoint) {
  const SimilarityReport same = CompareTokenSets({"a", "b"}, {"a", "b"});
  EXPECT_EQ(same.precision().str(), "100.00");
  EXPECT_EQ(same.recall().str(), "100.00");
  EXPECT_EQ(same.f1().str(), "100.00");
  const SimilarityReport none = CompareTokenSets({"a"}, {"b"});
  EXPECT_EQ(none.intersection_size, 0u);
  EXPECT_EQ(none.f1().str(), "0.00");
}

TEST(CompareTokenSetsTest, PartialOverlap) {
  const SimilarityReport r = CompareTokenSets({"a", "b", "c"}, {"b", "c", "d"});
  EXPECT_EQ(r.intersection_size, 2u);
  EXPECT_EQ(r.precision().str(), "66.67");
  EXPECT_EQ(r.recall().str(), "66.67");
  EXPECT_EQ(r.f1().str(), "66.67");
}

TEST(CompareTokenSetsTest, SwappingSwapsPrecisionAndRecall) {
  const SimilarityReport ab = CompareTokenSets({"a", "b", "c", "d"}, {"a"});
  const SimilarityReport ba = CompareTokenSets({"a"}, {"a", "b", "c", "d"});
  EXPECT_EQ(ab.precision(), ba.recall());
  EXPECT_EQ(ab.recall(), ba.precision());
  EXPECT_EQ(ab.f1(), ba.f1());
  EXPECT_EQ(ab.precision().str(), "25.00");
  EXPECT_EQ(ab.f1().str(), "40.00");
}

TEST(CompareTokenSetsTest, OneEmptySideIsZero) {
  const SimilarityReport r = CompareTokenSets({}, {"a"});
  EXPECT_EQ(r.precision().str(), "0.00");
  EXPECT_EQ(r.recall().str(), "0.00");
}

TEST(CompareTokenSetsTest, BothEmptyIsAnError) {
  EXPECT_EQ(CodeOf([] { CompareTokenSets({}, {}); }), ErrorCode::kEmptyComparison);
}

TEST(StrategyNameTest, RoundTrip) {
  for (auto s : {CharacteristicStrategy::kInventoryPrefixes,
                 CharacteristicStrategy::kInventorySuffixes,
                 CharacteristicStrategy::kAllWordInitial,
                 CharacteristicStrategy::kAllContinuation}) {
    EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  }
  EXPECT_EQ(CodeOf([] { ParseStrategy("bogus"); }), ErrorCode::kInvalidConfig);
}

}  // namespace
}  // namespace morpheval
