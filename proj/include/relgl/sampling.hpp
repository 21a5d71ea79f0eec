#pragma once

// Seeded random elements of GL(n, R) as words in transvections and unit diagonals.

#include <cstdint>
#include <random>
#include <vector>

#include "relgl/mat.hpp"

namespace relgl {

/// Independent per-index seed, so sample k is the same under any scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// A word of `length` random factors, each a random transvection or a random unit diagonal.
/// Finite rings have stable rank 1, so such words reach all of GL(n, R).
inline Mat random_gl_word(const FiniteRing& r, unsigned n, unsigned length, std::mt19937_64& rng) {
  const auto& units = r.units();
  std::uniform_int_distribution<std::size_t> elem(0, r.size() - 1), unit(0, units.size() - 1);
  std::uniform_int_distribution<unsigned> pos(0, n - 1), kind(0, 3);
  Mat g = identity(r, n);
  for (unsigned step = 0; step < length; ++step) {
    if (kind(rng) == 0) {
      std::vector<Elem> d(n);
      for (auto& x : d) x = units[unit(rng)];
      g = g * diagonal(r, d);
    } else {
      unsigned i = pos(rng), j = pos(rng);
      while (j == i) j = pos(rng);
      g = g * transvection(r, n, i, j, static_cast<Elem>(elem(rng)));
    }
  }
  return g;
}

/// A random word in the given generator pool.
inline Mat random_word(const std::vector<Mat>& pool, unsigned length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Mat g = identity(*pool.front().ring, pool.front().n);
  for (unsigned step = 0; step < length; ++step) g = g * pool[pick(rng)];
  return g;
}

}  // namespace relgl
