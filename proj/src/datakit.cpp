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

#include "reinflect/datakit.hpp"

#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "reinflect/errors.hpp"
#include "reinflect/rng.hpp"

namespace reinflect::datakit {

namespace {

std::string triple_key(const unimorph::Entry& e) {
  return e.lemma + '\t' + (e.form ? *e.form : std::string()) + '\t' +
         e.bundle.key();
}

std::string pair_key(const unimorph::Entry& e) {
  return e.lemma + '\t' + e.bundle.key();
}

double pct(std::size_t hits, std::size_t total) {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(hits) /
                                static_cast<double>(total);
}

/// Entries counted as inconsistent: every member of a (lemma, tags) group
/// with more than one distinct form, not just the surplus ones.
std::size_t count_inconsistent(const unimorph::Dataset& d) {
  std::unordered_map<std::string, std::unordered_set<std::string>> forms;
  for (const auto& e : d.entries()) {
    forms[pair_key(e)].insert(e.form ? *e.form : std::string());
  }
  std::size_t hits = 0;
  for (const auto& e : d.entries()) {
    if (forms[pair_key(e)].size() > 1) ++hits;
  }
  return hits;
}

}  // namespace

void SplitSpec::validate() const {
  auto in_unit = [](double f) { return f > 0.0 && f < 1.0; };
  if (!in_unit(train_fraction) || !in_unit(dev_fraction) ||
      !in_unit(test_fraction)) {
    throw Error(ErrorKind::BadConfig, "split fractions must lie in (0,1)");
  }
  if (std::abs(train_fraction + dev_fraction + test_fraction - 1.0) > 1e-9) {
    throw Error(ErrorKind::BadConfig, "split fractions must sum to 1");
  }
  if (train_cap < 1) {
    throw Error(ErrorKind::BadConfig, "train_cap must be at least 1");
  }
}

DedupResult deduplicate(const unimorph::Dataset& d) {
  std::unordered_set<std::string> seen;
  std::vector<unimorph::Entry> kept;
  kept.reserve(d.size());
  std::size_t dropped = 0;
  for (const auto& e : d.entries()) {
    if (seen.insert(triple_key(e)).second) {
      kept.push_back(e);
    } else {
      ++dropped;
    }
  }
  return DedupResult{unimorph::Dataset(d.language(), std::move(kept)), dropped};
}

Splits split(const unimorph::Dataset& d, const SplitSpec& spec) {
  spec.validate();
  const std::size_t n = d.size();
  const auto dev_n = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * spec.dev_fraction));
  const auto test_n = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * spec.test_fraction));
  if (dev_n == 0 || test_n == 0 || dev_n + test_n >= n) {
    throw Error(ErrorKind::TooSmall,
                "dataset of size " + std::to_string(n) +
                    " cannot fill all three splits");
  }
  const std::size_t train_n = n - dev_n - test_n;

  SplitMix64 rng(derive_seed(spec.seed, std::string_view("split")));
  std::vector<std::size_t> order = shuffled_indices(n, rng);

  auto take = [&](std::size_t begin, std::size_t count) {
    std::vector<unimorph::Entry> part;
    part.reserve(count);
    for (std::size_t i = begin; i < begin + count; ++i) {
      part.push_back(d.entries()[order[i]]);
    }
    return unimorph::Dataset(d.language(), std::move(part));
  };

  Splits out{take(0, train_n), take(train_n, dev_n),
             take(train_n + dev_n, test_n)};
  if (out.train.size() > spec.train_cap) {
    out.train = subsample_by_lemma(
        out.train, spec.train_cap,
        derive_seed(spec.seed, std::string_view("cap")));
  }
  return out;
}

unimorph::Dataset subsample_by_lemma(const unimorph::Dataset& d,
                                     std::size_t cap, std::uint64_t seed) {
  // Paradigm = all entries sharing a lemma; paradigms keyed in first-seen
  // order so the shuffle below is the only source of randomness.
  std::vector<std::string> lemmas;
  std::unordered_map<std::string, std::size_t> paradigm_size;
  for (const auto& e : d.entries()) {
    auto [it, inserted] = paradigm_size.emplace(e.lemma, 0);
    if (inserted) lemmas.push_back(e.lemma);
    ++it->second;
  }
  if (!lemmas.empty()) {
    std::size_t smallest = paradigm_size[lemmas[0]];
    for (const auto& l : lemmas) {
      smallest = std::min(smallest, paradigm_size[l]);
    }
    if (smallest > cap) {
      throw Error(ErrorKind::CapTooSmall,
                  "smallest paradigm (" + std::to_string(smallest) +
                      " entries) exceeds cap " + std::to_string(cap));
    }
  }

  SplitMix64 rng(seed);
  shuffle(lemmas, rng);

  std::unordered_set<std::string> admitted;
  std::size_t used = 0;
  for (const auto& lemma : lemmas) {
    std::size_t size = paradigm_size[lemma];
    if (used + size <= cap) {
      admitted.insert(lemma);
      used += size;
    }
  }

  std::vector<unimorph::Entry> kept;
  kept.reserve(used);
  for (const auto& e : d.entries()) {
    if (admitted.count(e.lemma)) kept.push_back(e);
  }
  return unimorph::Dataset(d.language(), std::move(kept));
}

SplitStats compute_stats(const unimorph::Dataset& train,
                         const unimorph::Dataset& dev,
                         const unimorph::Dataset& test) {
  SplitStats stats;
  stats.train.size = train.size();
  stats.dev.size = dev.size();
  stats.test.size = test.size();
  stats.train.inconsistency_pct = pct(count_inconsistent(train), train.size());
  stats.dev.inconsistency_pct = pct(count_inconsistent(dev), dev.size());
  stats.test.inconsistency_pct = pct(count_inconsistent(test), test.size());

  std::unordered_map<std::string, std::unordered_set<std::string>> train_forms;
  std::unordered_set<std::string> train_lemmas;
  for (const auto& e : train.entries()) {
    train_forms[pair_key(e)].insert(e.form ? *e.form : std::string());
    train_lemmas.insert(e.lemma);
  }

  auto eval_stats = [&](const unimorph::Dataset& split, EvalSplitStats& out) {
    std::size_t contradictions = 0;
    std::size_t in_vocab = 0;
    for (const auto& e : split.entries()) {
      auto it = train_forms.find(pair_key(e));
      // A train form set containing the entry's form is agreement, even if
      // train itself is inconsistent on that key.
      if (it != train_forms.end() &&
          !it->second.count(e.form ? *e.form : std::string())) {
        ++contradictions;
      }
      if (train_lemmas.count(e.lemma)) ++in_vocab;
    }
    out.contradiction_pct = pct(contradictions, split.size());
    out.in_vocabulary_pct = pct(in_vocab, split.size());
  };
  eval_stats(dev, stats.dev);
  eval_stats(test, stats.test);
  return stats;
}

}  // namespace reinflect::datakit
