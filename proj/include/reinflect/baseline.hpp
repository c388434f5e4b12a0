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

#ifndef REINFLECT_BASELINE_HPP_
#define REINFLECT_BASELINE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "reinflect/evalkit.hpp"
#include "reinflect/unimorph.hpp"

namespace reinflect::baseline {

enum class AffixKind { Prefix, Suffix };

struct AffixRule {
  std::string input;   // possibly empty
  std::string output;  // possibly empty

  friend auto operator<=>(const AffixRule&, const AffixRule&) = default;
};

struct RuleExtraction {
  AffixRule prefix_rule;
  std::vector<AffixRule> suffix_rules;  // most general first
};

/// Decomposes lemma = P·stem·S around the longest common substring (ties:
/// leftmost in lemma, then leftmost in form) and emits the prefix change
/// plus one suffix rule per stem extension, from the bare affix swap up to
/// stem-plus-affix. An empty stem yields the whole-string rewrite.
RuleExtraction extract_rules(std::string_view lemma, std::string_view form);

struct PredictOptions {
  /// Pick suffix rules by frequency before match length (ablation order).
  bool freq_first = false;
};

/// Frequency tables of extracted transformations keyed on the exact
/// canonical bundle, with majority application at prediction time.
class RuleModel {
 public:
  struct Table {
    std::map<AffixRule, std::size_t> suffix;
    std::map<AffixRule, std::size_t> prefix;
  };

  static RuleModel train(const unimorph::Dataset& d);

  /// Longest matching suffix rule (frequency, then smallest output break
  /// ties), then the most frequent matching prefix rule. Unseen bundles and
  /// unmatched lemmas pass through unchanged.
  std::string predict(std::string_view lemma, const unimorph::FeatureBundle& b,
                      const PredictOptions& options = {}) const;

  evalkit::SystemRun predict_dataset(const unimorph::Dataset& blind,
                                     std::string system_name = "baseline",
                                     const PredictOptions& options = {}) const;

  std::size_t training_size() const { return training_size_; }
  const std::map<std::string, Table>& tables() const { return by_bundle_; }
  const std::string& language() const { return language_; }

  std::string to_json() const;
  static RuleModel from_json(std::string_view text);
  void save(const std::string& path) const;
  static RuleModel load(const std::string& path);

 private:
  std::map<std::string, Table> by_bundle_;  // key: canonical bundle key
  std::size_t training_size_ = 0;
  std::string language_;
};

}  // namespace reinflect::baseline

#endif  // REINFLECT_BASELINE_HPP_
