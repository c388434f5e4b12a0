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

#include "reinflect/evalkit.hpp"

#include <algorithm>
#include <cmath>

#include "reinflect/errors.hpp"
#include "reinflect/rng.hpp"
#include "reinflect/utf8.hpp"

namespace reinflect::evalkit {

namespace {

struct Totals {
  std::size_t correct = 0;
  long long distance = 0;
};

Totals totals_of(const ItemScores& s) {
  Totals t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    t.correct += s.correct[i];
    t.distance += s.distances[i];
  }
  return t;
}

/// Counts resamples where `winner` does not strictly beat `loser`. One
/// derived RNG per resample keeps the loop order-free.
std::size_t bootstrap_failures(const ItemScores& winner,
                               const ItemScores& loser,
                               const BootstrapConfig& cfg, Metric metric,
                               std::size_t m, bool parallel) {
  const std::size_t n = winner.size();
  const long long samples = static_cast<long long>(cfg.samples);
  std::size_t failures = 0;

  auto one_resample = [&](long long r) -> std::size_t {
    SplitMix64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    long long w = 0, l = 0;
    for (std::size_t k = 0; k < m; ++k) {
      auto idx = static_cast<std::size_t>(rng.below(n));
      if (metric == Metric::Accuracy) {
        w += winner.correct[idx];
        l += loser.correct[idx];
      } else {
        w += winner.distances[idx];
        l += loser.distances[idx];
      }
    }
    bool beats = metric == Metric::Accuracy ? (w > l) : (w < l);
    return beats ? 0 : 1;
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : failures) schedule(static)
#endif
    for (long long r = 0; r < samples; ++r) failures += one_resample(r);
  } else {
    for (long long r = 0; r < samples; ++r) failures += one_resample(r);
  }
  return failures;
}

SignificanceResult paired_bootstrap_impl(const ItemScores& a,
                                         const ItemScores& b,
                                         const BootstrapConfig& cfg,
                                         Metric metric, bool parallel) {
  cfg.validate();
  if (a.size() != b.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "paired bootstrap needs equal-length score vectors (" +
                    std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + ")");
  }
  if (a.size() == 0) {
    throw Error(ErrorKind::EmptySet, "paired bootstrap over zero items");
  }

  Totals ta = totals_of(a);
  Totals tb = totals_of(b);
  bool tie = metric == Metric::Accuracy ? ta.correct == tb.correct
                                        : ta.distance == tb.distance;
  if (tie) return SignificanceResult{1.0, false, false};
  bool a_wins = metric == Metric::Accuracy ? ta.correct > tb.correct
                                           : ta.distance < tb.distance;
  const ItemScores& winner = a_wins ? a : b;
  const ItemScores& loser = a_wins ? b : a;

  const std::size_t n = a.size();
  const auto m = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(static_cast<double>(n) * cfg.ratio)));
  std::size_t failures =
      bootstrap_failures(winner, loser, cfg, metric, m, parallel);
  double p = static_cast<double>(failures) / static_cast<double>(cfg.samples);
  return SignificanceResult{p, a_wins, p < cfg.alpha};
}

ItemScores score_run_impl(const unimorph::Dataset& gold, const SystemRun& run,
                          bool parallel) {
  if (run.predictions.size() != gold.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " items, run has " +
                    std::to_string(run.predictions.size()));
  }
  const auto n = static_cast<long long>(gold.size());
  std::vector<std::u32string> gold_forms(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& form = gold.entries()[i].form;
    if (!form) {
      throw Error(ErrorKind::MissingForm, "gold entry has no form", i + 1);
    }
    gold_forms[i] = utf8::decode(*form, i + 1);
  }

  ItemScores scores;
  scores.correct.assign(gold.size(), 0);
  scores.distances.assign(gold.size(), 0);

  auto score_item = [&](long long i) {
    std::u32string pred = utf8::decode(run.predictions[i]);
    int d = levenshtein(pred, gold_forms[i]);
    scores.distances[i] = d;
    scores.correct[i] = d == 0 ? 1 : 0;
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long i = 0; i < n; ++i) score_item(i);
  } else {
    for (long long i = 0; i < n; ++i) score_item(i);
  }
  return scores;
}

}  // namespace

int levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (m == 0) return static_cast<int>(n);
  std::vector<int> row(m + 1);
  for (std::size_t i = 0; i <= m; ++i) row[i] = static_cast<int>(i);
  for (std::size_t j = 1; j <= n; ++j) {
    int diag = row[0];
    row[0] = static_cast<int>(j);
    for (std::size_t i = 1; i <= m; ++i) {
      int up = row[i];
      int cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[i] = std::min({row[i - 1] + 1, up + 1, diag + cost});
      diag = up;
    }
  }
  return row[m];
}

int levenshtein_utf8(std::string_view a, std::string_view b) {
  return levenshtein(utf8::decode(a), utf8::decode(b));
}

void BootstrapConfig::validate() const {
  if (samples < 1) {
    throw Error(ErrorKind::BadConfig, "bootstrap samples must be >= 1");
  }
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw Error(ErrorKind::BadConfig, "bootstrap ratio must lie in (0,1]");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::BadConfig, "alpha must lie in (0,1)");
  }
}

ItemScores score_run(const unimorph::Dataset& gold, const SystemRun& run) {
  return score_run_impl(gold, run, true);
}

double accuracy(const ItemScores& s) {
  if (s.size() == 0) throw Error(ErrorKind::EmptySet, "accuracy of zero items");
  return static_cast<double>(totals_of(s).correct) /
         static_cast<double>(s.size());
}

double mean_distance(const ItemScores& s) {
  if (s.size() == 0) {
    throw Error(ErrorKind::EmptySet, "mean distance of zero items");
  }
  return static_cast<double>(totals_of(s).distance) /
         static_cast<double>(s.size());
}

SignificanceResult paired_bootstrap(const ItemScores& a, const ItemScores& b,
                                    const BootstrapConfig& cfg, Metric metric) {
  return paired_bootstrap_impl(a, b, cfg, metric, true);
}

namespace reference {

ItemScores score_run(const unimorph::Dataset& gold, const SystemRun& run) {
  return score_run_impl(gold, run, false);
}

SignificanceResult paired_bootstrap(const ItemScores& a, const ItemScores& b,
                                    const BootstrapConfig& cfg, Metric metric) {
  return paired_bootstrap_impl(a, b, cfg, metric, false);
}

}  // namespace reference

std::map<std::string, int> rank_language(
    const std::map<std::string, ItemScores>& runs, const BootstrapConfig& cfg,
    const RankOptions& options) {
  if (runs.empty()) {
    throw Error(ErrorKind::EmptySet, "no systems to rank");
  }
  const std::size_t n = runs.begin()->second.size();
  for (const auto& [name, scores] : runs) {
    if (scores.size() != n) {
      throw Error(ErrorKind::SizeMismatch,
                  "system '" + name + "' has " + std::to_string(scores.size()) +
                      " items, expected " + std::to_string(n));
    }
  }

  struct Ordered {
    std::string name;
    const ItemScores* scores;
    Totals totals;
  };
  std::vector<Ordered> order;
  order.reserve(runs.size());
  for (const auto& [name, scores] : runs) {
    order.push_back(Ordered{name, &scores, totals_of(scores)});
  }
  std::sort(order.begin(), order.end(), [&](const Ordered& x, const Ordered& y) {
    if (options.metric == Metric::Accuracy) {
      if (x.totals.correct != y.totals.correct) {
        return x.totals.correct > y.totals.correct;
      }
    } else {
      if (x.totals.distance != y.totals.distance) {
        return x.totals.distance < y.totals.distance;
      }
    }
    return x.name < y.name;
  });

  auto pair_cfg = [&](const std::string& x, const std::string& y) {
    BootstrapConfig pair = cfg;
    const std::string& lo = std::min(x, y);
    const std::string& hi = std::max(x, y);
    pair.seed = derive_seed(cfg.seed, std::string_view(lo),
                            std::string_view(hi));
    return pair;
  };

  std::map<std::string, int> ranks;
  std::vector<const Ordered*> tier;
  int tier_rank = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Ordered& sys = order[i];
    if (i == 0) {
      tier = {&sys};
      ranks[sys.name] = tier_rank;
      continue;
    }
    bool separated = false;
    std::size_t checks = options.pairwise_tiers ? tier.size() : 1;
    for (std::size_t t = 0; t < checks && !separated; ++t) {
      const Ordered& member = *tier[t];
      separated = paired_bootstrap(*member.scores, *sys.scores,
                                   pair_cfg(member.name, sys.name),
                                   options.metric)
                      .significant;
    }
    if (separated) {
      tier_rank = static_cast<int>(i) + 1;
      tier = {&sys};
    } else {
      tier.push_back(&sys);
    }
    ranks[sys.name] = tier_rank;
  }
  return ranks;
}

RankTable aggregate_ranks(
    const std::map<std::string, std::map<std::string, int>>& per_language,
    const std::map<std::string, double>& mean_accuracy) {
  RankTable table;
  table.per_language = per_language;

  std::vector<std::string> systems;
  for (const auto& [lang, ranks] : per_language) {
    for (const auto& [sys, rank] : ranks) {
      (void)rank;
      if (std::find(systems.begin(), systems.end(), sys) == systems.end()) {
        systems.push_back(sys);
      }
    }
  }
  std::sort(systems.begin(), systems.end());
  if (systems.empty()) {
    throw Error(ErrorKind::EmptySet, "no ranks to aggregate");
  }

  for (const auto& sys : systems) {
    std::vector<std::size_t> counts(systems.size(), 0);
    for (const auto& [lang, ranks] : per_language) {
      auto it = ranks.find(sys);
      if (it == ranks.end()) {
        throw Error(ErrorKind::MissingLanguage,
                    "system '" + sys + "' has no rank for language '" + lang +
                        "'");
      }
      auto r = static_cast<std::size_t>(it->second);
      if (r < 1 || r > counts.size()) {
        throw Error(ErrorKind::BadConfig,
                    "rank " + std::to_string(r) + " out of range for '" + sys +
                        "'");
      }
      ++counts[r - 1];
    }
    table.count_vectors[sys] = std::move(counts);
  }

  auto mean_of = [&](const std::string& sys) {
    auto it = mean_accuracy.find(sys);
    return it == mean_accuracy.end() ? 0.0 : it->second;
  };
  table.final_order = systems;
  std::sort(table.final_order.begin(), table.final_order.end(),
            [&](const std::string& x, const std::string& y) {
              const auto& cx = table.count_vectors.at(x);
              const auto& cy = table.count_vectors.at(y);
              if (cx != cy) {
                return std::lexicographical_compare(cy.begin(), cy.end(),
                                                    cx.begin(), cx.end());
              }
              double mx = mean_of(x), my = mean_of(y);
              if (mx != my) return mx > my;
              return x < y;
            });

  int assigned = 0;
  int current_rank = 1;
  const std::vector<std::size_t>* prev = nullptr;
  for (const auto& sys : table.final_order) {
    const auto& counts = table.count_vectors.at(sys);
    if (prev == nullptr || counts != *prev) {
      current_rank = assigned + 1;
      prev = &counts;
    }
    table.final_ranks[sys] = current_rank;
    ++assigned;
  }
  return table;
}

double oracle(const std::vector<ItemScores>& runs) {
  if (runs.empty()) throw Error(ErrorKind::EmptySet, "oracle over no systems");
  const std::size_t n = runs.front().size();
  if (n == 0) throw Error(ErrorKind::EmptySet, "oracle over zero items");
  for (const auto& r : runs) {
    if (r.size() != n) {
      throw Error(ErrorKind::SizeMismatch, "oracle runs differ in length");
    }
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& r : runs) {
      if (r.correct[i]) {
        ++hits;
        break;
      }
    }
  }
  return static_cast<double>(hits) / static_cast<double>(n);
}

const char* difficulty_name(Difficulty d) {
  switch (d) {
    case Difficulty::VeryEasy:
      return "very_easy";
    case Difficulty::Easy:
      return "easy";
    case Difficulty::Medium:
      return "medium";
    case Difficulty::Hard:
      return "hard";
    case Difficulty::VeryHard:
      return "very_hard";
  }
  return "unknown";
}

DifficultyReport difficulty(const unimorph::Dataset& gold,
                            const std::vector<ItemScores>& runs,
                            const unimorph::Schema& schema) {
  if (runs.empty()) {
    throw Error(ErrorKind::EmptySet, "difficulty over no systems");
  }
  const std::size_t n = gold.size();
  if (n == 0) throw Error(ErrorKind::EmptySet, "difficulty over zero items");
  for (const auto& r : runs) {
    if (r.size() != n) {
      throw Error(ErrorKind::SizeMismatch,
                  "difficulty runs must match gold size");
    }
  }
  const std::size_t s = runs.size();

  DifficultyReport report;
  report.buckets.resize(n);
  std::map<std::string, std::array<std::size_t, 5>> bucket_counts;

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    for (const auto& r : runs) k += r.correct[i];
    // Integer thresholds: easy is c >= 0.8, hard is c <= 0.2, exact at the
    // boundaries.
    Difficulty bucket;
    if (k == s) {
      bucket = Difficulty::VeryEasy;
    } else if (k == 0) {
      bucket = Difficulty::VeryHard;
    } else if (5 * k >= 4 * s) {
      bucket = Difficulty::Easy;
    } else if (5 * k <= s) {
      bucket = Difficulty::Hard;
    } else {
      bucket = Difficulty::Medium;
    }
    report.buckets[i] = bucket;

    std::string pos = "UNK";
    for (const auto& tag : gold.entries()[i].bundle.tags) {
      auto cat = schema.category(tag.text);
      if (cat && schema.pos_categories.count(*cat)) {
        pos = tag.text;
        break;
      }
    }
    auto [it, inserted] = bucket_counts.emplace(
        pos, std::array<std::size_t, 5>{0, 0, 0, 0, 0});
    ++it->second[static_cast<std::size_t>(bucket)];
  }

  for (const auto& [pos, counts] : bucket_counts) {
    std::size_t total = 0;
    for (std::size_t c : counts) total += c;
    report.pos_counts[pos] = total;
    std::array<double, 5> pcts{};
    for (std::size_t b = 0; b < 5; ++b) {
      pcts[b] = total == 0 ? 0.0
                           : 100.0 * static_cast<double>(counts[b]) /
                                 static_cast<double>(total);
    }
    report.pos_histogram_pct[pos] = pcts;
  }
  return report;
}

}  // namespace reinflect::evalkit
