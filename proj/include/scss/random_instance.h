#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scss/instance.h"

namespace scss {

// Platform-independent draws on top of mt19937_64 (whose output sequence is
// fixed by the standard, unlike the std distributions).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomInstanceSpec {
  std::size_t n = 6;
  std::size_t m = 10;
  Weight max_weight = 10;
  int k1 = 1;
  int k2 = 1;
  std::uint64_t seed = 1;
  // Lay a Hamiltonian cycle through a random vertex order first (needs m >= n).
  bool strongly_connected = false;
};

// s = 0, t = 1; edges have distinct endpoints, parallel edges allowed;
// weights uniform in [0, max_weight].
Instance random_instance(const RandomInstanceSpec& spec);

}  // namespace scss
