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

#ifndef REINFLECT_EVALKIT_HPP_
#define REINFLECT_EVALKIT_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "reinflect/unimorph.hpp"

namespace reinflect::evalkit {

/// One system's predictions for one language, aligned index-by-index with
/// the gold test set.
struct SystemRun {
  std::string system;
  std::string language;
  std::vector<std::string> predictions;
};

struct ItemScores {
  std::vector<std::uint8_t> correct;  // exact match per item
  std::vector<int> distances;         // Levenshtein per item

  std::size_t size() const { return correct.size(); }
};

/// Unit-cost edit distance over Unicode scalar values.
int levenshtein(std::u32string_view a, std::u32string_view b);
int levenshtein_utf8(std::string_view a, std::string_view b);

/// Per-item exact match and Levenshtein against gold forms. Parallel over
/// items when built with OpenMP; results identical to reference::score_run.
ItemScores score_run(const unimorph::Dataset& gold, const SystemRun& run);

double accuracy(const ItemScores& s);
double mean_distance(const ItemScores& s);

enum class Metric { Accuracy, Distance };

struct BootstrapConfig {
  std::size_t samples = 10000;
  double ratio = 0.5;
  double alpha = 0.005;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SignificanceResult {
  double p = 1.0;
  bool a_better = false;  // full-set winner is `a`; false on ties
  bool significant = false;
};

/// Paired bootstrap: each resample draws max(1, floor(n*ratio)) indices with
/// replacement, the same indices for both systems. p is the fraction of
/// resamples where the full-set winner fails to strictly beat the loser;
/// resample ties count against significance. Full-set ties give p = 1.
/// Each resample uses a seed derived from (cfg.seed, resample index), so
/// parallel and serial execution agree exactly for any thread count.
SignificanceResult paired_bootstrap(const ItemScores& a, const ItemScores& b,
                                    const BootstrapConfig& cfg,
                                    Metric metric = Metric::Accuracy);

struct RankOptions {
  Metric metric = Metric::Accuracy;
  /// Tier membership checked against every tier member instead of the
  /// leader only.
  bool pairwise_tiers = false;
};

/// Competition ranks: systems sorted by the metric; a system joins the
/// current tier when the paired bootstrap cannot separate it from the tier
/// leader, otherwise it starts a new tier at rank (#systems placed so
/// far + 1). Pair seeds derive from (cfg.seed, name pair), order-free.
std::map<std::string, int> rank_language(
    const std::map<std::string, ItemScores>& runs, const BootstrapConfig& cfg,
    const RankOptions& options = {});

struct RankTable {
  std::map<std::string, std::map<std::string, int>> per_language;
  /// count_vectors[s][r] = number of languages where s ranked r+1.
  std::map<std::string, std::vector<std::size_t>> count_vectors;
  /// Display order: count vectors compared from rank 1 down, ties broken by
  /// mean accuracy then name.
  std::vector<std::string> final_order;
  /// Competition ranks over count-vector equivalence classes; exact
  /// count-vector ties share a rank.
  std::map<std::string, int> final_ranks;
};

RankTable aggregate_ranks(
    const std::map<std::string, std::map<std::string, int>>& per_language,
    const std::map<std::string, double>& mean_accuracy = {});

/// Fraction of items at least one run predicts correctly.
double oracle(const std::vector<ItemScores>& runs);

enum class Difficulty { VeryEasy, Easy, Medium, Hard, VeryHard };

const char* difficulty_name(Difficulty d);

struct DifficultyReport {
  std::vector<Difficulty> buckets;  // per item
  /// POS -> percentage of that POS's items per bucket, indexed by
  /// Difficulty's enumerator order.
  std::map<std::string, std::array<double, 5>> pos_histogram_pct;
  std::map<std::string, std::size_t> pos_counts;
};

/// Buckets by the fraction c of systems correct per item: very easy c = 1,
/// easy 0.8 <= c < 1, medium 0.2 < c < 0.8, hard 0 < c <= 0.2, very hard
/// c = 0. The POS of an item is its first tag in a POS-flagged category.
DifficultyReport difficulty(const unimorph::Dataset& gold,
                            const std::vector<ItemScores>& runs,
                            const unimorph::Schema& schema);

/// Serial implementations kept as the reference the parallel kernels are
/// tested against; results are bit-identical by construction.
namespace reference {
ItemScores score_run(const unimorph::Dataset& gold, const SystemRun& run);
SignificanceResult paired_bootstrap(const ItemScores& a, const ItemScores& b,
                                    const BootstrapConfig& cfg,
                                    Metric metric = Metric::Accuracy);
}  // namespace reference

}  // namespace reinflect::evalkit

#endif  // REINFLECT_EVALKIT_HPP_
