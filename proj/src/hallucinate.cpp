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

#include "reinflect/hallucinate.hpp"

#include <algorithm>
#include <unordered_set>

#include "reinflect/errors.hpp"
#include "reinflect/utf8.hpp"

namespace reinflect::hallucinate {

namespace {

std::string triple_key(const unimorph::Entry& e) {
  return e.lemma + '\t' + (e.form ? *e.form : std::string()) + '\t' +
         e.bundle.key();
}

bool has_qualifying_segment(const unimorph::Entry& e, std::size_t min_len) {
  if (!e.form) return false;
  Alignment a = align(e.lemma, *e.form);
  for (const auto& seg : a.segments) {
    if (seg.shared && seg.lemma_text.size() >= min_len) return true;
  }
  return false;
}

unimorph::Dataset augment_impl(const unimorph::Dataset& d,
                               const HallucinationConfig& cfg, bool parallel) {
  cfg.validate();
  if (!d.empty() && d.alphabet().empty()) {
    throw Error(ErrorKind::EmptyAlphabet, "dataset has an empty alphabet");
  }

  std::vector<std::size_t> sources;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d.entries()[i].form) {
      throw Error(ErrorKind::MissingForm, "entry has no form", i + 1);
    }
    if (has_qualifying_segment(d.entries()[i], cfg.min_shared_len)) {
      sources.push_back(i);
    }
  }
  if (cfg.target_count == 0) {
    return unimorph::Dataset(d.language(), {});
  }
  if (sources.empty()) {
    throw Error(ErrorKind::NothingHallucinable,
                "no entry has a shared segment of length >= " +
                    std::to_string(cfg.min_shared_len));
  }

  SplitMix64 order_rng(derive_seed(cfg.seed, std::string_view("order")));
  shuffle(sources, order_rng);

  std::unordered_set<std::string> real;
  real.reserve(d.size());
  for (const auto& e : d.entries()) real.insert(triple_key(e));

  const auto slots = static_cast<long long>(cfg.target_count);
  std::vector<unimorph::Entry> produced(cfg.target_count);
  std::vector<std::uint8_t> filled(cfg.target_count, 0);

  auto fill_slot = [&](long long slot) {
    const unimorph::Entry& source =
        d.entries()[sources[static_cast<std::size_t>(slot) % sources.size()]];
    for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
      SplitMix64 rng(derive_seed(cfg.seed, std::string_view("slot"),
                                 static_cast<std::uint64_t>(slot),
                                 static_cast<std::uint64_t>(attempt)));
      HallucinatedEntry h = hallucinate_entry(source, d.alphabet(), cfg, rng);
      if (h.changed && !real.count(triple_key(h.entry))) {
        produced[static_cast<std::size_t>(slot)] = std::move(h.entry);
        filled[static_cast<std::size_t>(slot)] = 1;
        return;
      }
    }
    // Retries exhausted (degenerate alphabet); the slot stays empty.
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long slot = 0; slot < slots; ++slot) fill_slot(slot);
  } else {
    for (long long slot = 0; slot < slots; ++slot) fill_slot(slot);
  }

  std::vector<unimorph::Entry> entries;
  entries.reserve(cfg.target_count);
  for (std::size_t i = 0; i < cfg.target_count; ++i) {
    if (filled[i]) entries.push_back(std::move(produced[i]));
  }
  return unimorph::Dataset(d.language(), std::move(entries));
}

}  // namespace

std::vector<Segment> Alignment::non_shared() const {
  std::vector<Segment> out;
  for (const auto& seg : segments) {
    if (!seg.shared) out.push_back(seg);
  }
  return out;
}

Alignment align(const std::u32string& lemma, const std::u32string& form) {
  const std::size_t n = lemma.size();
  const std::size_t m = form.size();
  // LCS table, then a fixed traceback (match first, then the larger branch,
  // lemma side on ties) so the segmentation is deterministic.
  std::vector<std::vector<std::size_t>> dp(n + 1,
                                           std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (lemma[i - 1] == form[j - 1]) {
        dp[i][j] = dp[i - 1][j - 1] + 1;
      } else {
        dp[i][j] = std::max(dp[i - 1][j], dp[i][j - 1]);
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> matches;  // reversed
  std::size_t i = n, j = m;
  while (i > 0 && j > 0) {
    if (lemma[i - 1] == form[j - 1] && dp[i][j] == dp[i - 1][j - 1] + 1) {
      matches.emplace_back(i - 1, j - 1);
      --i;
      --j;
    } else if (dp[i - 1][j] >= dp[i][j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(matches.begin(), matches.end());

  Alignment out;
  std::size_t li = 0, fi = 0;
  auto emit_gap = [&](std::size_t lemma_end, std::size_t form_end) {
    if (li < lemma_end || fi < form_end) {
      out.segments.push_back(Segment{lemma.substr(li, lemma_end - li),
                                     form.substr(fi, form_end - fi), false});
      li = lemma_end;
      fi = form_end;
    }
  };
  std::size_t k = 0;
  while (k < matches.size()) {
    auto [ml, mf] = matches[k];
    emit_gap(ml, mf);
    // Extend the run of consecutive matches on both sides.
    std::size_t run = 1;
    while (k + run < matches.size() &&
           matches[k + run].first == ml + run &&
           matches[k + run].second == mf + run) {
      ++run;
    }
    out.segments.push_back(
        Segment{lemma.substr(ml, run), form.substr(mf, run), true});
    li = ml + run;
    fi = mf + run;
    k += run;
  }
  emit_gap(n, m);
  return out;
}

Alignment align(std::string_view lemma, std::string_view form) {
  if (lemma.empty() || form.empty()) {
    throw Error(ErrorKind::EmptyField, "alignment needs lemma and form");
  }
  return align(utf8::decode(lemma), utf8::decode(form));
}

void HallucinationConfig::validate() const {
  if (min_shared_len < 2) {
    throw Error(ErrorKind::BadConfig, "min_shared_len must be >= 2");
  }
  if (max_retries < 1) {
    throw Error(ErrorKind::BadConfig, "max_retries must be >= 1");
  }
}

HallucinatedEntry hallucinate_entry(const unimorph::Entry& e,
                                    const std::vector<char32_t>& alphabet,
                                    const HallucinationConfig& cfg,
                                    SplitMix64& rng) {
  cfg.validate();
  if (alphabet.empty()) {
    throw Error(ErrorKind::EmptyAlphabet, "cannot draw from an empty alphabet");
  }
  if (!e.form) {
    throw Error(ErrorKind::MissingForm, "cannot hallucinate without a form");
  }

  Alignment a = align(e.lemma, *e.form);
  bool changed = false;
  std::u32string lemma, form;
  for (const auto& seg : a.segments) {
    if (seg.shared && seg.lemma_text.size() >= cfg.min_shared_len) {
      std::size_t len = seg.lemma_text.size();
      if (!cfg.preserve_length) {
        len = len - 1 + static_cast<std::size_t>(rng.below(3));
      }
      std::u32string replacement;
      replacement.reserve(len);
      for (std::size_t i = 0; i < len; ++i) {
        replacement.push_back(
            alphabet[static_cast<std::size_t>(rng.below(alphabet.size()))]);
      }
      lemma += replacement;
      form += replacement;
      changed = true;
    } else {
      lemma += seg.lemma_text;
      form += seg.form_text;
    }
  }
  if (!changed) return HallucinatedEntry{e, false};

  unimorph::Entry out;
  out.lemma = utf8::encode(lemma);
  out.form = utf8::encode(form);
  out.bundle = e.bundle;
  return HallucinatedEntry{std::move(out), true};
}

unimorph::Dataset augment(const unimorph::Dataset& d,
                          const HallucinationConfig& cfg) {
  return augment_impl(d, cfg, true);
}

namespace reference {

unimorph::Dataset augment(const unimorph::Dataset& d,
                          const HallucinationConfig& cfg) {
  return augment_impl(d, cfg, false);
}

}  // namespace reference

}  // namespace reinflect::hallucinate
