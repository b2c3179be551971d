// Copyright 2026 The v2r Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "v2r/metrics/ocr.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace v2r {
namespace {

struct Word {
  std::size_t start = 0;
  std::string text;  // lowercased
};

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

std::vector<Word> split_words(std::string_view s, bool trim_punct) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    std::size_t a = i, b = j;
    if (trim_punct) {
      while (a < b && std::ispunct(static_cast<unsigned char>(s[a]))) ++a;
      while (b > a && std::ispunct(static_cast<unsigned char>(s[b - 1]))) --b;
    }
    if (b > a) {
      Word w{a, {}};
      for (std::size_t k = a; k < b; ++k) w.text += lower(s[k]);
      out.push_back(std::move(w));
    }
    i = j;
  }
  return out;
}

// `mask[k]` marks positions that may differ.
bool matches(const std::string& candidate, const std::string& pattern, const std::vector<bool>& mask) {
  if (candidate.size() != pattern.size()) return false;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (!mask[k] && candidate[k] != pattern[k]) return false;
  }
  return true;
}

}  // namespace

OcrFidelity ocr_fidelity(std::string_view raw, const OcrTruth& truth) {
  OcrFidelity f;
  if (truth.replacements.empty()) return f;
  const auto source = split_words(truth.source, false);
  const auto output = split_words(raw, true);

  std::size_t kept = 0, fixed = 0;
  for (const auto& r : truth.replacements) {
    const auto idx = static_cast<std::size_t>(r.index);
    std::size_t wi = source.size();
    for (std::size_t w = 0; w < source.size(); ++w) {
      if (idx >= source[w].start && idx < source[w].start + source[w].text.size()) wi = w;
    }
    if (wi == source.size()) continue;  // replacement on whitespace
    const Word& word = source[wi];
    std::vector<bool> mask(word.text.size(), false);
    for (const auto& other : truth.replacements) {
      const auto oi = static_cast<std::size_t>(other.index);
      if (oi >= word.start && oi < word.start + word.text.size()) mask[oi - word.start] = true;
    }
    std::size_t rank = 0;
    for (std::size_t w = 0; w < wi; ++w) rank += matches(source[w].text, word.text, mask) ? 1 : 0;
    std::size_t seen = 0;
    for (const auto& out : output) {
      if (!matches(out.text, word.text, mask)) continue;
      if (seen++ != rank) continue;
      const char c = out.text[idx - word.start];
      if (c == lower(r.replacement)) {
        ++kept;
      } else if (c == lower(r.original)) {
        ++fixed;
      }
      break;
    }
  }
  const double n = static_cast<double>(truth.replacements.size());
  f.reported_as_written = static_cast<double>(kept) / n;
  f.inferred_correction = static_cast<double>(fixed) / n;
  return f;
}

}  // namespace v2r
