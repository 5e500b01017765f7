#pragma once

#include <random>

#include "shelfbraid/engine.hpp"

namespace shelfbraid::testing {

inline BraidWord random_word(std::mt19937_64& rng, int max_len, int max_index) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, max_index);
  std::uniform_int_distribution<int> sgn(0, 1);
  BraidWord w;
  int n = len(rng);
  w.letters.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w.letters.push_back({idx(rng), sgn(rng) ? +1 : -1});
  return w;
}

inline BraidWord random_positive_word(std::mt19937_64& rng, int max_len, int max_index) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, max_index);
  BraidWord w;
  int n = len(rng);
  w.letters.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w.letters.push_back({idx(rng), +1});
  return w;
}

}  // namespace shelfbraid::testing
