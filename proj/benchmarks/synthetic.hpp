#pragma once

// Deterministic synthetic words and vocabularies for benchmarks.

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace morpheval::bench {

inline const std::vector<std::string>& Letters() {
  static const std::vector<std::string> kLetters = {"a", "b", "c", "d", "e", "i", "l", "m",
                                                    "n", "o", "r", "s", "t", "u", "á", "ñ"};
  return kLetters;
}

inline std::vector<std::string> Words(std::size_t n, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(3, 10);
  std::uniform_int_distribution<std::size_t> letter(0, Letters().size() - 1);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string w;
    for (std::size_t k = len(rng); k > 0; --k) w += Letters()[letter(rng)];
    out.push_back(std::move(w));
  }
  return out;
}

// Byte length of the first / last code point.
inline std::size_t FirstCharBytes(const std::string& w) {
  std::size_t n = 1;
  while (n < w.size() && (static_cast<unsigned char>(w[n]) & 0xC0) == 0x80) ++n;
  return n;
}
inline std::size_t LastCharBytes(const std::string& w) {
  std::size_t b = w.size() - 1;
  while (b > 0 && (static_cast<unsigned char>(w[b]) & 0xC0) == 0x80) --b;
  return w.size() - b;
}

// Unknown token, every positional letter, then positional substrings of
// `words` up to `size` tokens.
inline std::vector<std::string> VocabTokens(const std::vector<std::string>& words,
                                            std::size_t size, std::uint64_t seed = 2) {
  std::vector<std::string> tokens = {"[UNK]"};
  std::set<std::string> seen(tokens.begin(), tokens.end());
  for (const auto& l : Letters()) {
    for (std::string t : {l, "##" + l}) {
      if (seen.insert(t).second) tokens.push_back(t);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  while (tokens.size() < size) {
    const std::string& w = words[pick(rng)];
    // Byte offsets on code-point boundaries.
    std::vector<std::size_t> cuts;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if ((static_cast<unsigned char>(w[i]) & 0xC0) != 0x80) cuts.push_back(i);
    }
    cuts.push_back(w.size());
    std::uniform_int_distribution<std::size_t> b_dist(0, cuts.size() - 2);
    const std::size_t b = b_dist(rng);
    std::uniform_int_distribution<std::size_t> e_dist(b + 1, cuts.size() - 1);
    const std::size_t e = e_dist(rng);
    std::string t = (b == 0 ? "" : "##") + w.substr(cuts[b], cuts[e] - cuts[b]);
    if (seen.insert(t).second) tokens.push_back(std::move(t));
  }
  return tokens;
}

}  // namespace morpheval::bench
