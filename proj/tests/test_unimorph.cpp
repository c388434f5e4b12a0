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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "reinflect/errors.hpp"
#include "reinflect/unimorph.hpp"
#include "reinflect/utf8.hpp"
#include "support.hpp"

using namespace reinflect;
using namespace reinflect::unimorph;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("parse three-column lines") {
  Dataset d = parse_dataset("walk\twalked\tV;PST\n", "eng", true);
  REQUIRE(d.size() == 1);
  CHECK(d.entries()[0].lemma == "walk");
  CHECK(d.entries()[0].form == "walked");
  CHECK(d.entries()[0].bundle == FeatureBundle::of({"V", "PST"}));
  CHECK(d.language() == "eng");
}

TEST_CASE("parse blind two-column lines") {
  Dataset d = parse_dataset("walk\tV;PST\n", "eng", false);
  REQUIRE(d.size() == 1);
  CHECK(d.entries()[0].lemma == "walk");
  CHECK_FALSE(d.entries()[0].form.has_value());
  CHECK(d.entries()[0].bundle == FeatureBundle::of({"V", "PST"}));
}

TEST_CASE("parse arity errors carry the line number") {
  try {
    parse_dataset("walk\twalked\n", "eng", true);
    FAIL("expected MalformedLine");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedLine);
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("got 2") != std::string::npos);
  }
  try {
    parse_dataset("a\tb\tT\nx\ty\tz\tw\n", "eng", true);
    FAIL("expected MalformedLine");
  } catch (const Error& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("parse rejects empty fields") {
  CHECK(kind_of([] { parse_dataset("\tb\tT\n", "eng", true); }) ==
        ErrorKind::EmptyField);
  CHECK(kind_of([] { parse_dataset("a\t\tT\n", "eng", true); }) ==
        ErrorKind::EmptyField);
  CHECK(kind_of([] { parse_dataset("a\tb\t\n", "eng", true); }) ==
        ErrorKind::EmptyField);
  CHECK(kind_of([] { parse_dataset("a\tb\tV;;PST\n", "eng", true); }) ==
        ErrorKind::EmptyField);
}

TEST_CASE("parse rejects invalid UTF-8") {
  std::string bad = "wal\xffk\twalked\tV\n";
  CHECK(kind_of([&] { parse_dataset(bad, "eng", true); }) ==
        ErrorKind::InvalidUtf8);
}

TEST_CASE("blank lines are skipped, line numbers still count them") {
  Dataset d = parse_dataset("\na\tb\tT\n\nc\td\tU\n", "eng", true);
  CHECK(d.size() == 2);
  try {
    parse_dataset("\na\tb\n", "eng", true);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("serialize emits tab-separated LF lines in order") {
  Dataset d = parse_dataset("walk\twalked\tV;PST\ngo\twent\tV;PST\n", "eng",
                            true);
  CHECK(serialize_dataset(d, true) == "walk\twalked\tV;PST\ngo\twent\tV;PST\n");
  CHECK(serialize_dataset(d, false) == "walk\tV;PST\ngo\tV;PST\n");
  CHECK(serialize_dataset(Dataset("eng", {}), true) == "");
}

TEST_CASE("serialize with forms fails on blind entries") {
  Dataset d = parse_dataset("walk\tV;PST\n", "eng", false);
  CHECK(kind_of([&] { serialize_dataset(d, true); }) == ErrorKind::MissingForm);
}

TEST_CASE("round-trip: parse then serialize is byte-exact on generated data") {
  std::mt19937_64 rng(20260809);
  for (int iter = 0; iter < 1000; ++iter) {
    Dataset d = testsupport::random_dataset(rng, 1 + iter % 17, iter % 4);
    std::string text = serialize_dataset(d, true);
    Dataset back = parse_dataset(text, d.language(), true);
    CHECK(back.entries() == d.entries());
    CHECK(serialize_dataset(back, true) == text);
  }
}

TEST_CASE("alphabet is exactly the characters of lemmas and forms") {
  Dataset d = parse_dataset("ab\tac\tT\nбв\tбг\tU\n", "tst", true);
  std::vector<char32_t> expected = {U'a', U'b', U'c', U'б', U'в', U'г'};
  CHECK(d.alphabet() == expected);

  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    Dataset r = testsupport::random_dataset(rng, 1 + iter % 9, iter % 4);
    std::set<char32_t> expect;
    for (const auto& e : r.entries()) {
      for (char32_t c : utf8::decode(e.lemma)) expect.insert(c);
      for (char32_t c : utf8::decode(*e.form)) expect.insert(c);
    }
    CHECK(r.alphabet() == std::vector<char32_t>(expect.begin(), expect.end()));
  }
}

TEST_CASE("canonicalize orders tags by schema category order") {
  const Schema& s = Schema::builtin_default();
  FeatureBundle b = FeatureBundle::of({"PST", "V"});
  FeatureBundle canon = canonicalize_bundle(b, s);
  CHECK(canon == FeatureBundle::of({"V", "PST"}));
  // Already canonical input is untouched.
  CHECK(canonicalize_bundle(canon, s) == canon);
  // Categories get resolved on the way.
  CHECK(canon.tags[0].category == "POS");
  CHECK(canon.tags[1].category == "Tense");
}

TEST_CASE("canonicalize rejects two tags in one category") {
  const Schema& s = Schema::builtin_default();
  try {
    canonicalize_bundle(FeatureBundle::of({"V", "SG", "PL"}), s);
    FAIL("expected DuplicateCategory");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateCategory);
    CHECK(std::string(e.what()).find("Number") != std::string::npos);
    CHECK(std::string(e.what()).find("SG") != std::string::npos);
    CHECK(std::string(e.what()).find("PL") != std::string::npos);
  }
}

TEST_CASE("identical repeated tags collapse with a warning") {
  const Schema& s = Schema::builtin_default();
  std::vector<std::string> warnings;
  FeatureBundle canon =
      canonicalize_bundle(FeatureBundle::of({"V", "V", "PST"}), s, &warnings);
  CHECK(canon == FeatureBundle::of({"V", "PST"}));
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("V") != std::string::npos);
}

TEST_CASE("unknown tags keep their relative order after known tags") {
  const Schema& s = Schema::builtin_default();
  FeatureBundle canon =
      canonicalize_bundle(FeatureBundle::of({"ZZTOP", "PST", "AAA", "V"}), s);
  CHECK(canon == FeatureBundle::of({"V", "PST", "ZZTOP", "AAA"}));
  // Two unknown tags never clash: they have no known category.
  CHECK_NOTHROW(canonicalize_bundle(FeatureBundle::of({"FOO", "BAR"}), s));
}

TEST_CASE("canonicalize is idempotent and preserves tag multiset") {
  const Schema& s = Schema::builtin_default();
  std::mt19937_64 rng(4711);
  const std::vector<std::string> pool = {"V",  "N",   "PST", "PRS", "SG",
                                         "PL", "ACC", "FOO", "IND", "FEM"};
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<std::string> texts;
    std::uniform_int_distribution<std::size_t> len(1, 5);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t k = len(rng);
    for (std::size_t i = 0; i < k; ++i) texts.push_back(pool[pick(rng)]);
    FeatureBundle b = FeatureBundle::of(std::move(texts));
    FeatureBundle canon;
    try {
      canon = canonicalize_bundle(b, s);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateCategory);
      continue;
    }
    CHECK(canonicalize_bundle(canon, s) == canon);
    // Multiset of texts preserved up to identical-duplicate collapse.
    std::multiset<std::string> before, after;
    for (const auto& t : b.tags) before.insert(t.text);
    for (const auto& t : canon.tags) after.insert(t.text);
    std::set<std::string> before_set(before.begin(), before.end());
    std::set<std::string> after_set(after.begin(), after.end());
    CHECK(before_set == after_set);
    if (before.size() == before_set.size()) CHECK(before == after);
  }
}

TEST_CASE("validate_dataset reports and leaves data alone") {
  const Schema& s = Schema::builtin_default();
  Dataset clean = parse_dataset("walk\twalked\tV;PST\n", "eng", true);
  CHECK(validate_dataset(clean, s).clean());

  Dataset dirty = parse_dataset(
      "a\tb\tV;SG;PL\n"
      "c\td\tPST;V\n"
      "e\tf\tN;N;SG\n",
      "eng", true);
  ValidationReport report = validate_dataset(dirty, s);
  REQUIRE(report.findings.size() == 3);
  CHECK(report.findings[0].entry_index == 0);
  CHECK(report.findings[0].kind == Finding::Kind::DuplicateCategory);
  CHECK(report.findings[1].entry_index == 1);
  CHECK(report.findings[1].kind == Finding::Kind::NonCanonicalOrder);
  CHECK(report.findings[2].entry_index == 2);
  CHECK(report.findings[2].kind == Finding::Kind::RepeatedTag);
  // Unmodified input.
  CHECK(dirty.entries()[1].bundle == FeatureBundle::of({"PST", "V"}));
}

TEST_CASE("schema files parse, reject conflicts, and drive ordering") {
  Schema s = Schema::parse(
      "# toy schema\n"
      "@order\tPOS\tTense\tNumber\n"
      "@pos\tPOS\n"
      "V\tPOS\n"
      "N\tPOS\n"
      "PST\tTense\n"
      "SG\tNumber\n"
      "PL\tNumber\n");
  CHECK(s.order_index("POS") == 0);
  CHECK(s.order_index("Number") == 2);
  CHECK(s.category("PST") == "Tense");
  CHECK_FALSE(s.category("XYZ").has_value());
  CHECK(s.pos_categories.count("POS") == 1);

  FeatureBundle canon =
      canonicalize_bundle(FeatureBundle::of({"SG", "PST", "N"}), s);
  CHECK(canon == FeatureBundle::of({"N", "PST", "SG"}));

  CHECK(kind_of([] { Schema::parse("V\tPOS\n"); }) == ErrorKind::BadSchema);
  CHECK(kind_of([] {
          Schema::parse("@order\tPOS\nV\tPOS\nV\tTense\n");
        }) == ErrorKind::BadSchema);
  CHECK(kind_of([] { Schema::parse("@order\tPOS\nPST\tTense\n"); }) ==
        ErrorKind::BadSchema);
}

TEST_CASE("dataset construction rejects malformed entries") {
  CHECK(kind_of([] {
          Dataset("x", {Entry{"", "f", FeatureBundle::of({"T"})}});
        }) == ErrorKind::EmptyField);
  CHECK(kind_of([] {
          Dataset("x", {Entry{"l", "", FeatureBundle::of({"T"})}});
        }) == ErrorKind::EmptyField);
  CHECK(kind_of([] { Dataset("x", {Entry{"l", "f", {}}}); }) ==
        ErrorKind::EmptyField);
  CHECK(kind_of([] {
          Dataset("x", {Entry{"l\te", "f", FeatureBundle::of({"T"})}});
        }) == ErrorKind::MalformedLine);
}

TEST_CASE("multi-byte scripts round-trip byte-exact") {
  std::string text =
      "идти\tшёл\tV;PST;MASC\n"
      "करना\tकिया\tV;PST\n"
      "ka42\tka42si3\tV;PRS\n";
  Dataset d = parse_dataset(text, "mix", true);
  CHECK(serialize_dataset(d, true) == text);
  CHECK(d.size() == 3);
}
