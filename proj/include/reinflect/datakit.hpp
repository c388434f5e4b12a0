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

#ifndef REINFLECT_DATAKIT_HPP_
#define REINFLECT_DATAKIT_HPP_

#include <cstdint>

#include "reinflect/unimorph.hpp"

namespace reinflect::datakit {

struct SplitSpec {
  double train_fraction = 0.70;
  double dev_fraction = 0.10;
  double test_fraction = 0.20;
  std::size_t train_cap = 100000;
  std::uint64_t seed = 0;

  void validate() const;  // throws BadConfig
};

struct SplitSizes {
  std::size_t size = 0;
  double inconsistency_pct = 0.0;
};

struct EvalSplitStats {
  std::size_t size = 0;
  double inconsistency_pct = 0.0;
  double contradiction_pct = 0.0;
  double in_vocabulary_pct = 0.0;
};

struct SplitStats {
  SplitSizes train;
  EvalSplitStats dev;
  EvalSplitStats test;
};

struct DedupResult {
  unimorph::Dataset dataset;
  std::size_t dropped = 0;
};

/// Keeps the first occurrence of each exact (lemma, form, tag-sequence)
/// triple, preserving order. Expects canonicalized bundles.
DedupResult deduplicate(const unimorph::Dataset& d);

struct Splits {
  unimorph::Dataset train;
  unimorph::Dataset dev;
  unimorph::Dataset test;
};

/// Seeded shuffle, then dev = round(n*dev_fraction), test =
/// round(n*test_fraction), train = remainder. Train larger than the cap is
/// reduced with subsample_by_lemma (seed derived from spec.seed).
Splits split(const unimorph::Dataset& d, const SplitSpec& spec);

/// Admits whole paradigms (all entries of one lemma) in seeded-random lemma
/// order while they fit under `cap`; entry order within the output follows
/// the input. Lemmas are never split.
unimorph::Dataset subsample_by_lemma(const unimorph::Dataset& d,
                                     std::size_t cap, std::uint64_t seed);

/// Inconsistency: entries whose (lemma, tags) key has more than one distinct
/// form inside the split. Contradiction (dev/test): key present in train but
/// the entry's form missing from train's form set for that key.
/// In-vocabulary (dev/test): lemma occurs as a train lemma.
SplitStats compute_stats(const unimorph::Dataset& train,
                         const unimorph::Dataset& dev,
                         const unimorph::Dataset& test);

}  // namespace reinflect::datakit

#endif  // REINFLECT_DATAKIT_HPP_
