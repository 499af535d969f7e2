#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond plain data types, recompute everything from scratch, and
// favour obviousness over speed.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Code points of a UTF-8 string, split on lead bytes.
std::vector<std::string> Chars(const std::string& word);

// First character bare, the rest with the marker.
std::vector<std::string> PositionalChars(const std::string& word,
                                         const std::string& marker);

std::string Strip(const std::string& token, const std::string& marker);

// Lowercase for ASCII and the Latin-1 supplement letters, table by table.
std::string LatinLower(const std::string& word);

struct TrainResult {
  bool too_small = false;
  std::vector<std::string> tokens;
  std::vector<std::pair<std::string, std::string>> merges;
};

// Agglomerative training recounting every pair each round. With
// `likelihood`, pairs are ranked by count(ab) / (count(a) * count(b));
// otherwise by count. Ties go to the smaller (left, right).
TrainResult Train(const std::map<std::string, std::uint64_t>& counts,
                  std::size_t target, std::uint64_t min_frequency,
                  const std::vector<std::string>& specials,
                  const std::string& marker, bool likelihood);

struct Seg {
  std::vector<std::string> tokens;
  bool unknown = false;
};

// Applies every merge, in table order, to the whole word.
Seg ReplayMerges(const std::string& word, const std::set<std::string>& vocab,
                 const std::vector<std::pair<std::string, std::string>>& merges,
                 const std::string& marker, const std::string& unk);

// Tries every prefix from longest to shortest at each position.
Seg GreedyLongest(const std::string& word, const std::set<std::string>& vocab,
                  const std::string& marker, const std::string& unk);

// floor(scale * num / den + 1/2) in hundredths; 0 when den is 0.
std::int64_t HalfUpHundredths(std::uint64_t num, std::uint64_t den,
                              std::uint64_t scale);

// Morpheme type tags as plain strings: "prefix", "suffix", "stem", "clitic".
struct RelevanceCounts {
  std::uint64_t inventory = 0;
  std::uint64_t matched = 0;
};

std::map<std::string, RelevanceCounts> Relevance(
    const std::vector<std::string>& vocab,
    const std::map<std::string, std::set<std::string>>& inventory,
    const std::string& marker, bool suffix_match_unmarked);

struct CoherenceTally {
  std::uint64_t single = 0;
  std::uint64_t recognized = 0;
  std::uint64_t not_recognized = 0;
  std::uint64_t excluded = 0;
};

struct Pair {
  std::string word;
  std::string morpheme;
  std::string type;
};

// Keyed by type tag, plus "overall".
std::map<std::string, CoherenceTally> Coherence(
    const std::vector<Pair>& pairs, const std::vector<Seg>& segs,
    const std::string& marker, bool anchor_suffixes);

struct AccuracyTally {
  std::uint64_t words = 0;
  std::uint64_t correct = 0;
  std::uint64_t tokens = 0;
};

AccuracyTally Accuracy(const std::vector<std::vector<std::vector<std::string>>>& readings,
                       const std::vector<Seg>& segs, const std::string& marker);

}  // namespace oracle
