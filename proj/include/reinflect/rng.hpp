/*
 * Copyright 2026 The Reinflect Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef REINFLECT_RNG_HPP_
#define REINFLECT_RNG_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

namespace reinflect {

/// splitmix64 (Vigna, 2015). 64-bit state, publicly documented reference
/// sequence; every randomized operation in this project draws from it so
/// results are reproducible across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound). Bitmask rejection, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> countl_zero_(bound - 1);
    std::uint64_t v;
    do {
      v = next() & mask;
    } while (v >= bound);
    return v;
  }

 private:
  static int countl_zero_(std::uint64_t x) {
    int n = 0;
    for (std::uint64_t probe = std::uint64_t{1} << 63; probe && !(x & probe);
         probe >>= 1) {
      ++n;
    }
    return n;
  }

  std::uint64_t state_;
};

/// FNV-1a over raw bytes. Used for seed derivation and manifest digests.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Deterministic stream derivation: one splitmix step over the combined
/// words. derive_seed(master, a, b) != derive_seed(master, b, a).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (b * 0x9E3779B97F4A7C15ULL));
  return g.next();
}

inline std::uint64_t derive_seed(std::uint64_t master) { return master; }

template <class... Rest>
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t part,
                          Rest... rest) {
  return derive_seed(mix_seed(master, part), rest...);
}

template <class... Rest>
std::uint64_t derive_seed(std::uint64_t master, std::string_view part,
                          Rest... rest) {
  return derive_seed(mix_seed(master, fnv1a64(part)), rest...);
}

/// Fisher-Yates with SplitMix64 draws; the one shuffle used everywhere.
template <class T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    using std::swap;
    swap(values[i - 1], values[j]);
  }
}

inline std::vector<std::size_t> shuffled_indices(std::size_t n,
                                                 SplitMix64& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  shuffle(idx, rng);
  return idx;
}

}  // namespace reinflect

#endif  // REINFLECT_RNG_HPP_
