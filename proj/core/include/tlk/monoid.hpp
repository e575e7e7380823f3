#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tlk/coxeter.hpp"
#include "tlk/twisted.hpp"

namespace tlk {

using Word = std::vector<int>;

struct MonoidElement {
  Word representative;  // lexicographically least word of the class
  std::vector<Word> words;
  std::size_t length() const { return representative.size(); }
};

inline constexpr std::size_t kDefaultWordCap = 1u << 20;

// Classes of positive words of length exactly len under braid-relation
// substitutions, sorted by representative.
std::vector<MonoidElement> classes_of_length(const CoxeterMatrix& q, std::size_t len,
                                             std::size_t word_cap = kDefaultWordCap);
// Lengths 0..max_len.
std::vector<std::vector<MonoidElement>> enumerate(const CoxeterMatrix& q, std::size_t max_len,
                                                  std::size_t word_cap = kDefaultWordCap);

struct Collision {
  Word a, b;
};

struct FaithfulnessReport {
  struct Level {
    std::size_t length, words, classes;
  };
  std::vector<Level> levels;
  std::vector<Collision> collisions;      // distinct classes with equal images
  std::vector<Collision> inconsistencies; // equivalent words with different images
  bool ok() const { return collisions.empty() && inconsistencies.empty(); }
};

FaithfulnessReport faithfulness_spotcheck(const TwistedContext& ctx, std::size_t max_len,
                                          std::size_t word_cap = kDefaultWordCap);

// ψ^Σ(gh) = ψ^Σ(g)ψ^Σ(h) on random pairs with |g| + |h| <= max_len.
struct MultiplicativityReport {
  std::size_t samples = 0;
  std::vector<Collision> failures;
  bool ok() const { return failures.empty(); }
};

MultiplicativityReport multiplicativity_check(const TwistedContext& ctx, std::size_t max_len, std::size_t samples,
                                              std::uint64_t seed);

std::string word_string(const CoxeterMatrix& q, const Word& w);

}  // namespace tlk
