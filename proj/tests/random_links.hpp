#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "alexdimer/braid.hpp"

namespace alexdimer::testing {

// Alternating braid closures: column k always receives sign (-1)^(k+1), so
// the closure is an alternating diagram; forcing every column to appear
// keeps it connected.  Three-strand words are built from 2 or 4 maximal
// same-letter blocks, which pins the middle circle's split length to 1 or
// 2; four-strand words are free, so some draws have longer splits.
inline std::vector<int> random_alternating_word(std::mt19937_64& rng,
                                                int strands) {
  std::vector<int> word;
  if (strands == 3) {
    const int blocks = 2 * (1 + static_cast<int>(rng() % 2));
    for (int b = 0; b < blocks; ++b) {
      const int letter = b % 2 == 0 ? 1 : -2;
      const int len = 1 + static_cast<int>(rng() % 3);
      word.insert(word.end(), static_cast<std::size_t>(len), letter);
    }
    return word;
  }
  const std::vector<int> alphabet{1, -2, 3};
  const int len = 4 + static_cast<int>(rng() % 5);
  for (int i = 0; i < len; ++i)
    word.push_back(alphabet[rng() % alphabet.size()]);
  for (const int letter : alphabet)
    if (std::find(word.begin(), word.end(), letter) == word.end())
      word.push_back(letter);
  return word;
}

inline LinkDiagram random_alternating_closure(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int strands = 3 + static_cast<int>(rng() % 2);
  return braid_closure("rand-" + std::to_string(seed), strands,
                       random_alternating_word(rng, strands));
}

}  // namespace alexdimer::testing
