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

#include "reinflect/unimorph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "reinflect/errors.hpp"
#include "reinflect/utf8.hpp"

namespace reinflect::unimorph {

namespace {

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n\f\v") != std::string_view::npos;
}

void check_field_chars(std::string_view value, const char* what,
                       std::size_t line) {
  if (value.find('\t') != std::string_view::npos ||
      value.find('\n') != std::string_view::npos) {
    throw Error(ErrorKind::MalformedLine,
                std::string(what) + " contains tab or newline", line);
  }
}

FeatureBundle parse_bundle(std::string_view tags_field, std::size_t line) {
  FeatureBundle bundle;
  for (std::string_view piece : split_on(tags_field, ';')) {
    if (piece.empty()) {
      throw Error(ErrorKind::EmptyField, "empty feature tag", line);
    }
    if (has_whitespace(piece)) {
      throw Error(ErrorKind::MalformedLine,
                  "feature tag '" + std::string(piece) + "' contains whitespace",
                  line);
    }
    bundle.tags.push_back(FeatureTag{std::string(piece), std::nullopt});
  }
  return bundle;
}

}  // namespace

FeatureBundle FeatureBundle::of(std::vector<std::string> texts) {
  FeatureBundle b;
  b.tags.reserve(texts.size());
  for (auto& t : texts) b.tags.push_back(FeatureTag{std::move(t), std::nullopt});
  return b;
}

std::string FeatureBundle::key() const {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i) out += ';';
    out += tags[i].text;
  }
  return out;
}

Dataset::Dataset(std::string language, std::vector<Entry> entries)
    : language_(std::move(language)), entries_(std::move(entries)) {
  std::set<char32_t> chars;
  std::size_t index = 0;
  for (const Entry& e : entries_) {
    ++index;
    if (e.lemma.empty()) {
      throw Error(ErrorKind::EmptyField, "empty lemma", index);
    }
    if (e.form && e.form->empty()) {
      throw Error(ErrorKind::EmptyField, "empty form", index);
    }
    if (e.bundle.tags.empty()) {
      throw Error(ErrorKind::EmptyField, "empty feature bundle", index);
    }
    check_field_chars(e.lemma, "lemma", index);
    for (char32_t c : utf8::decode(e.lemma, index)) chars.insert(c);
    if (e.form) {
      check_field_chars(*e.form, "form", index);
      for (char32_t c : utf8::decode(*e.form, index)) chars.insert(c);
    }
  }
  alphabet_.assign(chars.begin(), chars.end());
}

Dataset parse_dataset(std::string_view text, std::string language,
                      bool expect_forms) {
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  const std::size_t expected = expect_forms ? 3 : 2;
  while (start <= text.size()) {
    if (start == text.size()) break;
    std::size_t end = text.find('\n', start);
    std::string_view line = (end == std::string_view::npos)
                                ? text.substr(start)
                                : text.substr(start, end - start);
    start = (end == std::string_view::npos) ? text.size() : end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (!utf8::is_valid(line)) {
      utf8::decode(line, line_no);  // throws with position info
    }
    auto fields = split_on(line, '\t');
    if (fields.size() != expected) {
      throw Error(ErrorKind::MalformedLine,
                  "expected " + std::to_string(expected) + " fields, got " +
                      std::to_string(fields.size()),
                  line_no);
    }
    std::string_view lemma = fields[0];
    std::string_view form = expect_forms ? fields[1] : std::string_view{};
    std::string_view tags = expect_forms ? fields[2] : fields[1];
    if (lemma.empty()) throw Error(ErrorKind::EmptyField, "empty lemma", line_no);
    if (expect_forms && form.empty()) {
      throw Error(ErrorKind::EmptyField, "empty form", line_no);
    }
    if (tags.empty()) {
      throw Error(ErrorKind::EmptyField, "empty tag field", line_no);
    }
    Entry e;
    e.lemma = std::string(lemma);
    if (expect_forms) e.form = std::string(form);
    e.bundle = parse_bundle(tags, line_no);
    entries.push_back(std::move(e));
  }
  return Dataset(std::move(language), std::move(entries));
}

std::string serialize_dataset(const Dataset& d, bool emit_forms) {
  std::string out;
  std::size_t index = 0;
  for (const Entry& e : d.entries()) {
    ++index;
    out += e.lemma;
    out += '\t';
    if (emit_forms) {
      if (!e.form) {
        throw Error(ErrorKind::MissingForm,
                    "entry has no form but forms were requested", index);
      }
      out += *e.form;
      out += '\t';
    }
    out += e.bundle.key();
    out += '\n';
  }
  return out;
}

std::size_t Schema::order_index(const std::string& category) const {
  for (std::size_t i = 0; i < category_order.size(); ++i) {
    if (category_order[i] == category) return i;
  }
  return npos;
}

std::optional<std::string> Schema::category(const std::string& tag_text) const {
  auto it = category_of.find(tag_text);
  if (it == category_of.end()) return std::nullopt;
  return it->second;
}

const Schema& Schema::builtin_default() {
  static const Schema schema = [] {
    Schema s;
    s.category_order = {"POS",    "Aspect", "Mood",     "Tense",
                        "Person", "Number", "Gender",   "Case",
                        "Voice",  "Polarity", "Possession"};
    s.pos_categories = {"POS"};
    auto add = [&s](const std::string& category,
                    std::initializer_list<const char*> tags) {
      for (const char* t : tags) s.category_of.emplace(t, category);
    };
    add("POS", {"N", "V", "ADJ", "ADV", "PRO", "PROPN", "DET", "ART", "AUX",
                "NUM", "PART", "ADP", "COMP", "CONJ", "INTJ", "CLF",
                "V.PTCP", "V.MSDR", "V.CVB"});
    add("Aspect", {"IPFV", "PFV", "PRF", "PROG", "HAB", "ITER", "PROSP"});
    add("Mood", {"IND", "SBJV", "IMP", "COND", "OPT", "POT", "IRR", "REAL",
                 "DEB", "INTEN", "PURP"});
    add("Tense", {"PRS", "PST", "FUT", "NPST", "NFUT", "IMMED", "HOD", "RCT",
                  "RMT", "1DAY"});
    add("Person", {"0", "1", "2", "3", "4", "INCL", "EXCL"});
    add("Number", {"SG", "PL", "DU", "TRI", "PAUC", "GPAUC", "GRPL", "INVN"});
    add("Gender", {"MASC", "FEM", "NEUT"});
    add("Case", {"NOM", "ACC", "ERG", "ABS", "DAT", "GEN", "BEN", "INS",
                 "COM", "VOC", "ABL", "ALL", "ESS", "LOC", "TERM", "PRT"});
    add("Voice", {"ACT", "MID", "PASS", "ANTIP", "CAUS", "RECP", "REFL"});
    add("Polarity", {"POS", "NEG"});
    add("Possession", {"PSS1S", "PSS2S", "PSS3S", "PSS1P", "PSS2P", "PSS3P",
                       "ALN", "NALN"});
    return s;
  }();
  return schema;
}

Schema Schema::parse(std::string_view text) {
  Schema s;
  bool saw_order = false;
  std::size_t line_no = 0;
  for (std::string_view line : split_on(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_on(line, '\t');
    if (fields[0] == "@order") {
      if (saw_order) {
        throw Error(ErrorKind::BadSchema, "duplicate @order directive", line_no);
      }
      saw_order = true;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i].empty()) {
          throw Error(ErrorKind::BadSchema, "empty category in @order", line_no);
        }
        std::string cat(fields[i]);
        if (s.order_index(cat) != Schema::npos) {
          throw Error(ErrorKind::BadSchema,
                      "category '" + cat + "' listed twice in @order", line_no);
        }
        s.category_order.push_back(std::move(cat));
      }
    } else if (fields[0] == "@pos") {
      for (std::size_t i = 1; i < fields.size(); ++i) {
        s.pos_categories.insert(std::string(fields[i]));
      }
    } else {
      if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
        throw Error(ErrorKind::BadSchema,
                    "expected TAG<TAB>CATEGORY, got '" + std::string(line) + "'",
                    line_no);
      }
      auto [it, inserted] =
          s.category_of.emplace(std::string(fields[0]), std::string(fields[1]));
      if (!inserted && it->second != fields[1]) {
        throw Error(ErrorKind::BadSchema,
                    "tag '" + std::string(fields[0]) +
                        "' mapped to two categories",
                    line_no);
      }
    }
  }
  if (!saw_order) {
    throw Error(ErrorKind::BadSchema, "schema file has no @order directive");
  }
  for (const auto& [tag, cat] : s.category_of) {
    if (s.order_index(cat) == Schema::npos) {
      throw Error(ErrorKind::BadSchema,
                  "category '" + cat + "' (tag '" + tag +
                      "') missing from @order");
    }
  }
  if (s.pos_categories.empty() && s.order_index("POS") != Schema::npos) {
    s.pos_categories.insert("POS");
  }
  return s;
}

Schema Schema::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open schema file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

FeatureBundle canonicalize_bundle(const FeatureBundle& b, const Schema& s,
                                  std::vector<std::string>* warnings) {
  if (b.tags.empty()) {
    throw Error(ErrorKind::EmptyField, "empty feature bundle");
  }
  // Collapse repeated identical tags first; "V;V" is noise, not a category
  // conflict.
  std::vector<FeatureTag> tags;
  for (const FeatureTag& tag : b.tags) {
    bool seen = false;
    for (const FeatureTag& kept : tags) {
      if (kept.text == tag.text) {
        seen = true;
        break;
      }
    }
    if (seen) {
      if (warnings) {
        warnings->push_back("repeated tag '" + tag.text + "' collapsed");
      }
      continue;
    }
    tags.push_back(tag);
  }

  // Resolve categories and reject two distinct tags in one known category.
  struct Keyed {
    FeatureTag tag;
    std::size_t order;
    std::size_t position;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(tags.size());
  std::unordered_map<std::string, std::string> first_in_category;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    FeatureTag tag = tags[i];
    tag.category = s.category(tag.text);
    std::size_t order = Schema::npos;
    if (tag.category) {
      auto [it, inserted] = first_in_category.emplace(*tag.category, tag.text);
      if (!inserted) {
        throw Error(ErrorKind::DuplicateCategory,
                    "category " + *tag.category + " assigned two tags: " +
                        it->second + " and " + tag.text);
      }
      order = s.order_index(*tag.category);
    }
    keyed.push_back(Keyed{std::move(tag), order, i});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const Keyed& a, const Keyed& b) {
                     if (a.order != b.order) return a.order < b.order;
                     return a.position < b.position;
                   });
  FeatureBundle out;
  out.tags.reserve(keyed.size());
  for (auto& k : keyed) out.tags.push_back(std::move(k.tag));
  return out;
}

Dataset canonicalize_dataset(const Dataset& d, const Schema& s,
                             std::vector<std::string>* warnings) {
  std::vector<Entry> entries;
  entries.reserve(d.size());
  std::size_t index = 0;
  for (const Entry& e : d.entries()) {
    ++index;
    Entry out = e;
    try {
      out.bundle = canonicalize_bundle(e.bundle, s, warnings);
    } catch (const Error& err) {
      throw Error(err.kind(), err.what(), index);
    }
    entries.push_back(std::move(out));
  }
  return Dataset(d.language(), std::move(entries));
}

const char* finding_kind_name(Finding::Kind kind) {
  switch (kind) {
    case Finding::Kind::DuplicateCategory:
      return "duplicate-category";
    case Finding::Kind::NonCanonicalOrder:
      return "non-canonical-order";
    case Finding::Kind::EmptyField:
      return "empty-field";
    case Finding::Kind::RepeatedTag:
      return "repeated-tag";
  }
  return "unknown";
}

ValidationReport validate_dataset(const Dataset& d, const Schema& s) {
  ValidationReport report;
  std::size_t index = 0;
  for (const Entry& e : d.entries()) {
    // Dataset construction already rejects empty lemma/form; bundle-level
    // issues are reported here per entry.
    std::vector<std::string> warnings;
    try {
      FeatureBundle canon = canonicalize_bundle(e.bundle, s, &warnings);
      for (const std::string& w : warnings) {
        report.findings.push_back({index, Finding::Kind::RepeatedTag, w});
      }
      if (!(canon == e.bundle)) {
        report.findings.push_back(
            {index, Finding::Kind::NonCanonicalOrder,
             "tags '" + e.bundle.key() + "' reorder to '" + canon.key() + "'"});
      }
    } catch (const Error& err) {
      Finding::Kind kind = err.kind() == ErrorKind::DuplicateCategory
                               ? Finding::Kind::DuplicateCategory
                               : Finding::Kind::EmptyField;
      report.findings.push_back({index, kind, err.what()});
    }
    ++index;
  }
  return report;
}

}  // namespace reinflect::unimorph
