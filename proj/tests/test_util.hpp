#pragma once

#include <random>

#include "fano/intlin.hpp"

namespace fano::testutil {

// Deterministic RNG for property tests; seed fixed so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedf00dULL);
  return gen;
}

inline int rand_int(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(rng());
}

// Product of random shears, swaps and sign flips: unimodular by construction.
inline UnimodularMap random_unimodular(std::size_t n, int ops = 12) {
  IntMatrix m = IntMatrix::identity(n);
  for (int k = 0; k < ops; ++k) {
    int kind = rand_int(0, 2);
    std::size_t i = static_cast<std::size_t>(rand_int(0, static_cast<int>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rand_int(0, static_cast<int>(n) - 1));
    if (kind == 0 && i != j) {
      m.add_multiple_of_row(i, j, Int(rand_int(-2, 2)));
    } else if (kind == 1 && i != j) {
      m.swap_rows(i, j);
    } else {
      m.negate_row(i);
    }
  }
  return UnimodularMap(m);
}

inline IntMatrix random_matrix(std::size_t r, std::size_t c, int bound = 4) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rand_int(-bound, bound);
  return m;
}

inline IntMatrix random_full_row_rank(std::size_t r, std::size_t c, int bound = 4) {
  for (;;) {
    IntMatrix m = random_matrix(r, c, bound);
    if (rank(m) == r) return m;
  }
}

}  // namespace fano::testutil
