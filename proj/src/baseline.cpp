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

#include "reinflect/baseline.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "reinflect/errors.hpp"
#include "reinflect/utf8.hpp"

namespace reinflect::baseline {

namespace {

struct Stem {
  std::size_t length = 0;
  std::size_t lemma_start = 0;
  std::size_t form_start = 0;
};

/// Longest common substring by length, then leftmost start in lemma, then
/// leftmost start in form. O(|lemma|*|form|) suffix-match DP.
Stem longest_common_substring(const std::u32string& lemma,
                              const std::u32string& form) {
  Stem best;
  const std::size_t n = lemma.size();
  const std::size_t m = form.size();
  // match[j] = length of common substring ending at lemma[i-1], form[j-1].
  std::vector<std::size_t> match(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t up_left = diag;
      diag = match[j];
      match[j] = lemma[i - 1] == form[j - 1] ? up_left + 1 : 0;
      if (match[j] > 0) {
        std::size_t len = match[j];
        std::size_t ls = i - len;
        std::size_t fs = j - len;
        if (len > best.length ||
            (len == best.length &&
             (ls < best.lemma_start ||
              (ls == best.lemma_start && fs < best.form_start)))) {
          best = Stem{len, ls, fs};
        }
      }
    }
  }
  return best;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() &&
         s.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

RuleExtraction extract_rules(std::string_view lemma, std::string_view form) {
  if (lemma.empty() || form.empty()) {
    throw Error(ErrorKind::EmptyField, "rule extraction needs lemma and form");
  }
  const std::u32string l = utf8::decode(lemma);
  const std::u32string f = utf8::decode(form);
  Stem stem = longest_common_substring(l, f);

  RuleExtraction out;
  if (stem.length == 0) {
    out.prefix_rule = AffixRule{"", ""};
    out.suffix_rules.push_back(
        AffixRule{std::string(lemma), std::string(form)});
    return out;
  }

  std::u32string lemma_prefix = l.substr(0, stem.lemma_start);
  std::u32string form_prefix = f.substr(0, stem.form_start);
  std::u32string stem_text = l.substr(stem.lemma_start, stem.length);
  std::u32string lemma_suffix = l.substr(stem.lemma_start + stem.length);
  std::u32string form_suffix = f.substr(stem.form_start + stem.length);

  out.prefix_rule =
      AffixRule{utf8::encode(lemma_prefix), utf8::encode(form_prefix)};
  // From the bare affix swap up to the whole stem prepended: each extension
  // adds one stem character of context.
  out.suffix_rules.reserve(stem.length + 1);
  for (std::size_t k = stem.length + 1; k-- > 0;) {
    std::u32string context = stem_text.substr(k);
    out.suffix_rules.push_back(AffixRule{utf8::encode(context + lemma_suffix),
                                         utf8::encode(context + form_suffix)});
  }
  return out;
}

RuleModel RuleModel::train(const unimorph::Dataset& d) {
  RuleModel model;
  model.language_ = d.language();
  model.training_size_ = d.size();
  std::size_t index = 0;
  for (const auto& e : d.entries()) {
    ++index;
    if (!e.form) {
      throw Error(ErrorKind::MissingForm, "training entry has no form", index);
    }
    Table& table = model.by_bundle_[e.bundle.key()];
    RuleExtraction rules = extract_rules(e.lemma, *e.form);
    ++table.prefix[rules.prefix_rule];
    for (const auto& rule : rules.suffix_rules) ++table.suffix[rule];
  }
  return model;
}

std::string RuleModel::predict(std::string_view lemma,
                               const unimorph::FeatureBundle& b,
                               const PredictOptions& options) const {
  auto it = by_bundle_.find(b.key());
  if (it == by_bundle_.end()) return std::string(lemma);
  const Table& table = it->second;

  std::string result(lemma);

  // UTF-8 byte-level affix matching is scalar-safe: rule inputs start on a
  // scalar boundary and lead/continuation byte ranges are disjoint.
  const AffixRule* best_suffix = nullptr;
  std::size_t best_freq = 0;
  for (const auto& [rule, freq] : table.suffix) {
    if (!ends_with(result, rule.input)) continue;
    bool wins;
    if (best_suffix == nullptr) {
      wins = true;
    } else if (options.freq_first) {
      wins = freq > best_freq ||
             (freq == best_freq &&
              (rule.input.size() > best_suffix->input.size() ||
               (rule.input.size() == best_suffix->input.size() &&
                rule.output < best_suffix->output)));
    } else {
      wins = rule.input.size() > best_suffix->input.size() ||
             (rule.input.size() == best_suffix->input.size() &&
              (freq > best_freq ||
               (freq == best_freq && rule.output < best_suffix->output)));
    }
    if (wins) {
      best_suffix = &rule;
      best_freq = freq;
    }
  }
  if (best_suffix) {
    result.resize(result.size() - best_suffix->input.size());
    result += best_suffix->output;
  }

  const AffixRule* best_prefix = nullptr;
  std::size_t best_prefix_freq = 0;
  for (const auto& [rule, freq] : table.prefix) {
    if (!starts_with(result, rule.input)) continue;
    bool wins =
        best_prefix == nullptr || freq > best_prefix_freq ||
        (freq == best_prefix_freq &&
         (rule.input.size() > best_prefix->input.size() ||
          (rule.input.size() == best_prefix->input.size() &&
           rule.output < best_prefix->output)));
    if (wins) {
      best_prefix = &rule;
      best_prefix_freq = freq;
    }
  }
  if (best_prefix) {
    result = best_prefix->output + result.substr(best_prefix->input.size());
  }
  return result;
}

evalkit::SystemRun RuleModel::predict_dataset(
    const unimorph::Dataset& blind, std::string system_name,
    const PredictOptions& options) const {
  evalkit::SystemRun run;
  run.system = std::move(system_name);
  run.language = blind.language();
  run.predictions.reserve(blind.size());
  for (const auto& e : blind.entries()) {
    run.predictions.push_back(predict(e.lemma, e.bundle, options));
  }
  return run;
}

std::string RuleModel::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "affix-rule-model";
  j["version"] = 1;
  j["language"] = language_;
  j["training_size"] = training_size_;
  nlohmann::ordered_json bundles = nlohmann::ordered_json::object();
  for (const auto& [key, table] : by_bundle_) {
    nlohmann::ordered_json entry;
    auto dump_table = [](const std::map<AffixRule, std::size_t>& rules) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& [rule, count] : rules) {
        arr.push_back({{"in", rule.input}, {"out", rule.output},
                       {"count", count}});
      }
      return arr;
    };
    entry["suffix"] = dump_table(table.suffix);
    entry["prefix"] = dump_table(table.prefix);
    bundles[key] = std::move(entry);
  }
  j["bundles"] = std::move(bundles);
  return j.dump(2) + "\n";
}

RuleModel RuleModel::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadModel, std::string("model is not valid JSON: ") +
                                         e.what());
  }
  if (j.value("format", "") != "affix-rule-model" || j.value("version", 0) != 1) {
    throw Error(ErrorKind::BadModel, "unsupported model format or version");
  }
  RuleModel model;
  model.language_ = j.value("language", "");
  model.training_size_ = j.value("training_size", 0u);
  if (!j.contains("bundles") || !j["bundles"].is_object()) {
    throw Error(ErrorKind::BadModel, "model has no bundles object");
  }
  for (auto& [key, entry] : j["bundles"].items()) {
    Table& table = model.by_bundle_[key];
    auto load_table = [](const nlohmann::json& arr,
                         std::map<AffixRule, std::size_t>& rules) {
      for (const auto& item : arr) {
        AffixRule rule{item.at("in").get<std::string>(),
                       item.at("out").get<std::string>()};
        rules[rule] = item.at("count").get<std::size_t>();
      }
    };
    load_table(entry.value("suffix", nlohmann::json::array()), table.suffix);
    load_table(entry.value("prefix", nlohmann::json::array()), table.prefix);
  }
  return model;
}

void RuleModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write model to " + path);
  out << to_json();
}

RuleModel RuleModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read model from " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

}  // namespace reinflect::baseline
