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

// Test-only oracles and data generators. Everything here is implemented
// independently of the library code it checks: plain recursion, brute-force
// enumeration, and std::mt19937_64 instead of the library's RNG.

#ifndef REINFLECT_TESTS_SUPPORT_HPP_
#define REINFLECT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "reinflect/unimorph.hpp"

namespace testsupport {

// ---------------------------------------------------------------------------
// Edit distance: memoized plain recursion over the textbook definition.

inline int lev_rec(const std::u32string& a, const std::u32string& b,
                   std::size_t i, std::size_t j,
                   std::vector<std::vector<int>>& memo) {
  if (i == 0) return static_cast<int>(j);
  if (j == 0) return static_cast<int>(i);
  int& slot = memo[i][j];
  if (slot >= 0) return slot;
  int subst = lev_rec(a, b, i - 1, j - 1, memo) + (a[i - 1] == b[j - 1] ? 0 : 1);
  int del = lev_rec(a, b, i - 1, j, memo) + 1;
  int ins = lev_rec(a, b, i, j - 1, memo) + 1;
  return slot = std::min({subst, del, ins});
}

inline int levenshtein_oracle(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<int>> memo(a.size() + 1,
                                     std::vector<int>(b.size() + 1, -1));
  return lev_rec(a, b, a.size(), b.size(), memo);
}

// ---------------------------------------------------------------------------
// Longest common substring: enumerate every substring of the lemma, longest
// first, and find it in the form; ties broken by leftmost lemma start, then
// leftmost form start.

struct StemOracle {
  std::size_t length = 0;
  std::size_t lemma_start = 0;
  std::size_t form_start = 0;
};

inline StemOracle lcs_substring_oracle(const std::u32string& lemma,
                                       const std::u32string& form) {
  for (std::size_t len = std::min(lemma.size(), form.size()); len >= 1; --len) {
    for (std::size_t ls = 0; ls + len <= lemma.size(); ++ls) {
      std::u32string cand = lemma.substr(ls, len);
      std::size_t fs = form.find(cand);
      if (fs != std::u32string::npos) {
        // Leftmost lemma start wins; for that start, string::find already
        // returns the leftmost form start.
        return StemOracle{len, ls, fs};
      }
    }
  }
  return StemOracle{};
}

// ---------------------------------------------------------------------------
// Split-statistics oracles: literal re-statement of the definitions with
// nested loops, no maps.

inline std::size_t inconsistent_entries_oracle(
    const std::vector<reinflect::unimorph::Entry>& entries) {
  std::size_t hits = 0;
  for (const auto& e : entries) {
    for (const auto& other : entries) {
      if (e.lemma == other.lemma && e.bundle == other.bundle &&
          e.form != other.form) {
        ++hits;
        break;
      }
    }
  }
  return hits;
}

inline std::size_t contradiction_entries_oracle(
    const std::vector<reinflect::unimorph::Entry>& train,
    const std::vector<reinflect::unimorph::Entry>& eval) {
  std::size_t hits = 0;
  for (const auto& e : eval) {
    bool key_in_train = false;
    bool form_in_train = false;
    for (const auto& t : train) {
      if (t.lemma == e.lemma && t.bundle == e.bundle) {
        key_in_train = true;
        if (t.form == e.form) form_in_train = true;
      }
    }
    if (key_in_train && !form_in_train) ++hits;
  }
  return hits;
}

inline std::size_t in_vocabulary_entries_oracle(
    const std::vector<reinflect::unimorph::Entry>& train,
    const std::vector<reinflect::unimorph::Entry>& eval) {
  std::size_t hits = 0;
  for (const auto& e : eval) {
    for (const auto& t : train) {
      if (t.lemma == e.lemma) {
        ++hits;
        break;
      }
    }
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Independent paired-bootstrap resampler: mt19937_64 stream, same protocol.

struct BootstrapOracleResult {
  double p;
  bool a_better;
};

inline BootstrapOracleResult paired_bootstrap_oracle(
    const std::vector<int>& a_correct, const std::vector<int>& b_correct,
    std::size_t samples, double ratio, std::uint64_t seed) {
  const std::size_t n = a_correct.size();
  long long ta = 0, tb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ta += a_correct[i];
    tb += b_correct[i];
  }
  if (ta == tb) return {1.0, false};
  const std::vector<int>& w = ta > tb ? a_correct : b_correct;
  const std::vector<int>& l = ta > tb ? b_correct : a_correct;
  const auto m = std::max<std::size_t>(
      1, static_cast<std::size_t>(static_cast<double>(n) * ratio));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t failures = 0;
  for (std::size_t r = 0; r < samples; ++r) {
    long long ws = 0, ls = 0;
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t idx = pick(rng);
      ws += w[idx];
      ls += l[idx];
    }
    if (!(ws > ls)) ++failures;
  }
  return {static_cast<double>(failures) / static_cast<double>(samples),
          ta > tb};
}

// ---------------------------------------------------------------------------
// Generators (std::mt19937_64 so test data is independent of the library's
// seeding scheme).

inline std::string random_word(std::mt19937_64& rng,
                               const std::vector<std::string>& letters,
                               std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::size_t len = len_dist(rng);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) out += letters[pick(rng)];
  return out;
}

/// Per-script letter pools: ASCII, Cyrillic, Devanagari, and a tone-number
/// orthography style ("ka42").
inline const std::vector<std::vector<std::string>>& letter_pools() {
  static const std::vector<std::vector<std::string>> pools = {
      {"a", "b", "c", "d", "e", "k", "l", "m", "n", "o", "s", "t", "w"},
      {"б", "в", "г", "д", "ж", "з", "к", "л", "м", "н", "о", "п", "р", "а",
       "е", "и"},
      {"क", "ख", "ग", "घ", "च", "ज", "ट", "त", "द", "न", "प", "ब", "म", "र",
       "ल", "व", "ा", "ि", "ी"},
      {"k", "a", "t", "s", "e", "1", "2", "3", "4"},
  };
  return pools;
}

inline reinflect::unimorph::Dataset random_dataset(std::mt19937_64& rng,
                                                   std::size_t n_entries,
                                                   std::size_t pool_index) {
  const auto& letters = letter_pools()[pool_index % letter_pools().size()];
  static const std::vector<std::vector<std::string>> bundles = {
      {"V", "PST"}, {"V", "PRS", "3", "SG"}, {"N", "PL"},
      {"N", "SG"},  {"ADJ"},                 {"V", "FUT"},
  };
  std::uniform_int_distribution<std::size_t> bundle_pick(0, bundles.size() - 1);
  std::vector<reinflect::unimorph::Entry> entries;
  for (std::size_t i = 0; i < n_entries; ++i) {
    reinflect::unimorph::Entry e;
    e.lemma = random_word(rng, letters, 1, 8);
    e.form = random_word(rng, letters, 1, 8);
    e.bundle = reinflect::unimorph::FeatureBundle::of(
        std::vector<std::string>(bundles[bundle_pick(rng)]));
    entries.push_back(std::move(e));
  }
  return reinflect::unimorph::Dataset("tst", std::move(entries));
}

/// Purely suffixing toy language: form = lemma + suffix(bundle). Distinct
/// lemmas, deterministic suffixes, one entry per (lemma, bundle).
inline reinflect::unimorph::Dataset suffixing_language(
    std::mt19937_64& rng, std::size_t n_lemmas,
    const std::vector<std::pair<std::vector<std::string>, std::string>>&
        paradigm) {
  std::vector<reinflect::unimorph::Entry> entries;
  std::set<std::string> lemmas;
  const std::vector<std::string> letters = {"b", "d", "g", "k", "l",
                                            "m", "n", "r", "s", "t"};
  while (lemmas.size() < n_lemmas) {
    lemmas.insert(random_word(rng, letters, 3, 7));
  }
  for (const auto& lemma : lemmas) {
    for (const auto& [tags, suffix] : paradigm) {
      reinflect::unimorph::Entry e;
      e.lemma = lemma;
      e.form = lemma + suffix;
      e.bundle = reinflect::unimorph::FeatureBundle::of(
          std::vector<std::string>(tags));
      entries.push_back(std::move(e));
    }
  }
  return reinflect::unimorph::Dataset("toy", std::move(entries));
}

inline std::vector<std::pair<std::vector<std::string>, std::string>>
toy_paradigm(std::size_t n_bundles) {
  std::vector<std::pair<std::vector<std::string>, std::string>> out;
  const std::vector<std::string> suffix_pool = {
      "a",  "i",   "u",   "en",  "on",  "et",  "ot",  "ak",  "ik", "uk",
      "em", "om",  "ame", "ime", "ume", "ene", "one", "eta", "ota", "aka"};
  for (std::size_t b = 0; b < n_bundles; ++b) {
    out.push_back({{"V", "T" + std::to_string(b)},
                   suffix_pool[b % suffix_pool.size()] +
                       (b >= suffix_pool.size() ? std::to_string(b) : "")});
  }
  return out;
}

}  // namespace testsupport

#endif  // REINFLECT_TESTS_SUPPORT_HPP_
