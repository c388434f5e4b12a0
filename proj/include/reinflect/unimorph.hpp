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

#ifndef REINFLECT_UNIMORPH_HPP_
#define REINFLECT_UNIMORPH_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace reinflect::unimorph {

/// One morphosyntactic feature tag, e.g. "V" or "PST". `category` is filled
/// in by canonicalization when the schema knows the tag.
struct FeatureTag {
  std::string text;
  std::optional<std::string> category;

  friend bool operator==(const FeatureTag& a, const FeatureTag& b) {
    return a.text == b.text;
  }
};

/// Ordered, non-empty tag sequence. Canonical form: at most one tag per
/// known category, tags sorted by the schema's category order.
struct FeatureBundle {
  std::vector<FeatureTag> tags;

  static FeatureBundle of(std::vector<std::string> texts);

  /// ";"-joined tag texts; the key used by rule tables and stats.
  std::string key() const;

  friend bool operator==(const FeatureBundle& a, const FeatureBundle& b) {
    return a.tags == b.tags;
  }
};

struct Entry {
  std::string lemma;
  std::optional<std::string> form;
  FeatureBundle bundle;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.lemma == b.lemma && a.form == b.form && a.bundle == b.bundle;
  }
};

/// Language-labelled entry sequence. Immutable after construction; the
/// alphabet (sorted unique scalar values over all lemmas and forms) is
/// computed once and always consistent with the entries.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::string language, std::vector<Entry> entries);

  const std::string& language() const { return language_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<char32_t>& alphabet() const { return alphabet_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::string language_;
  std::vector<Entry> entries_;
  std::vector<char32_t> alphabet_;
};

/// Tag-to-category mapping with a total order over categories.
struct Schema {
  std::unordered_map<std::string, std::string> category_of;
  std::vector<std::string> category_order;
  std::unordered_set<std::string> pos_categories;

  /// Position in category_order, or npos for categories outside it.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t order_index(const std::string& category) const;

  /// Category of a tag text, empty optional when unknown.
  std::optional<std::string> category(const std::string& tag_text) const;

  /// Common UniMorph categories (POS, Aspect, Mood, Tense, Person, Number,
  /// Gender, Case, Voice, Polarity, Possession) with their usual tags.
  static const Schema& builtin_default();

  /// Text format: "@order" / "@pos" directive lines plus one
  /// TAG<TAB>CATEGORY line per tag. '#' starts a comment.
  static Schema parse(std::string_view text);
  static Schema load_file(const std::string& path);
};

Dataset parse_dataset(std::string_view text, std::string language,
                      bool expect_forms);

std::string serialize_dataset(const Dataset& d, bool emit_forms);

/// Stable sort by (category order, original position); identical repeated
/// tags collapse with a warning; two distinct tags in one known category
/// raise DuplicateCategory. Unknown tags sort last, keeping their order.
FeatureBundle canonicalize_bundle(const FeatureBundle& b, const Schema& s,
                                  std::vector<std::string>* warnings = nullptr);

/// Canonicalizes every entry's bundle. Errors carry the entry's 1-based
/// position as the line number.
Dataset canonicalize_dataset(const Dataset& d, const Schema& s,
                             std::vector<std::string>* warnings = nullptr);

struct Finding {
  enum class Kind { DuplicateCategory, NonCanonicalOrder, EmptyField,
                    RepeatedTag };
  std::size_t entry_index;
  Kind kind;
  std::string message;
};

const char* finding_kind_name(Finding::Kind kind);

struct ValidationReport {
  std::vector<Finding> findings;
  bool clean() const { return findings.empty(); }
};

/// Report-only corpus check; the dataset is not modified.
ValidationReport validate_dataset(const Dataset& d, const Schema& s);

}  // namespace reinflect::unimorph

#endif  // REINFLECT_UNIMORPH_HPP_
