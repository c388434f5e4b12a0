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

#ifndef REINFLECT_HALLUCINATE_HPP_
#define REINFLECT_HALLUCINATE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "reinflect/rng.hpp"
#include "reinflect/unimorph.hpp"

namespace reinflect::hallucinate {

struct Segment {
  std::u32string lemma_text;
  std::u32string form_text;
  bool shared = false;  // shared segments carry identical text on both sides

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Character alignment of lemma and form. Lemma-side texts concatenate to
/// the lemma, form-side texts to the form.
struct Alignment {
  std::vector<Segment> segments;

  std::vector<Segment> non_shared() const;
};

/// LCS character alignment; maximal runs of matched identical characters
/// become shared segments, interleaved leftovers become non-shared pairs.
Alignment align(std::string_view lemma, std::string_view form);
Alignment align(const std::u32string& lemma, const std::u32string& form);

struct HallucinationConfig {
  std::size_t min_shared_len = 4;  // replace shared substrings of length > 3
  std::size_t target_count = 0;
  std::uint64_t seed = 0;
  bool preserve_length = true;  // false allows +-1 length jitter
  std::size_t max_retries = 64;

  void validate() const;
};

struct HallucinatedEntry {
  unimorph::Entry entry;
  bool changed = false;  // false: no shared segment reached the threshold
};

/// Rewrites every qualifying shared segment with random alphabet characters,
/// splicing the same replacement into lemma and form; non-shared segments
/// and the bundle are untouched.
HallucinatedEntry hallucinate_entry(const unimorph::Entry& e,
                                    const std::vector<char32_t>& alphabet,
                                    const HallucinationConfig& cfg,
                                    SplitMix64& rng);

/// Generates cfg.target_count novel triples by cycling through the
/// hallucinable entries in seeded-random order. Duplicates of real entries
/// are regenerated with fresh randomness (cfg.max_retries attempts per
/// slot). Originals are not included. Slot seeds derive from (cfg.seed,
/// slot, attempt), so the parallel and serial paths emit identical output.
unimorph::Dataset augment(const unimorph::Dataset& d,
                          const HallucinationConfig& cfg);

namespace reference {
unimorph::Dataset augment(const unimorph::Dataset& d,
                          const HallucinationConfig& cfg);
}  // namespace reference

}  // namespace reinflect::hallucinate

#endif  // REINFLECT_HALLUCINATE_HPP_
