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

#include "v2r/synth/ocr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "v2r/error.hpp"
#include "v2r/image/draw.hpp"
#include "v2r/image/font.hpp"

namespace v2r {
namespace {

constexpr int kMargin = 24;
constexpr int kLineGap = 8;

std::vector<std::string> wrap(const std::string& text, std::size_t max_chars) {
  std::vector<std::string> lines;
  std::istringstream words(text);
  std::string word, line;
  while (words >> word) {
    if (word.size() > max_chars) throw InvalidArgument("word '" + word + "' wider than the canvas");
    if (!line.empty() && line.size() + 1 + word.size() > max_chars) {
      lines.push_back(line);
      line.clear();
    }
    if (!line.empty()) line += ' ';
    line += word;
  }
  if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

std::string_view to_string(BlurLevel level) {
  switch (level) {
    case BlurLevel::kB0:
      return "B0";
    case BlurLevel::kB1:
      return "B1";
    case BlurLevel::kB2:
      return "B2";
    case BlurLevel::kB3:
      return "B3";
  }
  return "";
}

BlurLevel parse_blur_level(std::string_view name) {
  if (name == "B0") return BlurLevel::kB0;
  if (name == "B1") return BlurLevel::kB1;
  if (name == "B2") return BlurLevel::kB2;
  if (name == "B3") return BlurLevel::kB3;
  throw InvalidArgument("unknown blur level '" + std::string(name) + "'");
}

double blur_sigma(BlurLevel level) {
  switch (level) {
    case BlurLevel::kB0:
      return 0.0;
    case BlurLevel::kB1:
      return 1.0;
    case BlurLevel::kB2:
      return 2.0;
    case BlurLevel::kB3:
      return 4.0;
  }
  return 0.0;
}

void validate(const OcrTaskSpec& spec) {
  if (spec.text.empty()) throw InvalidArgument("OCR text is empty");
  std::set<int> seen;
  for (const auto& r : spec.replacements) {
    if (r.index < 0 || r.index >= static_cast<int>(spec.text.size())) {
      throw InvalidArgument("replacement index " + std::to_string(r.index) + " outside the text");
    }
    if (!seen.insert(r.index).second) {
      throw InvalidArgument("duplicate replacement index " + std::to_string(r.index));
    }
    if (spec.text[static_cast<std::size_t>(r.index)] != r.original) {
      throw InvalidArgument("replacement original does not match the text at " +
                            std::to_string(r.index));
    }
    if (r.replacement == r.original) throw InvalidArgument("replacement equals the original");
  }
}

std::string corrupted_text(const OcrTaskSpec& spec) {
  std::string out = spec.text;
  for (const auto& r : spec.replacements) out[static_cast<std::size_t>(r.index)] = r.replacement;
  return out;
}

std::vector<Replacement> sample_replacements(const std::string& text, int count, Rng& rng) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) letters.push_back(static_cast<int>(i));
  }
  if (count < 0 || count > static_cast<int>(letters.size())) {
    throw InvalidArgument("not enough letters for the requested replacements");
  }
  rng.shuffle(letters);
  letters.resize(static_cast<std::size_t>(count));
  std::sort(letters.begin(), letters.end());
  std::vector<Replacement> out;
  for (int idx : letters) {
    const char original = text[static_cast<std::size_t>(idx)];
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(original)));
    char repl = static_cast<char>('a' + rng.uniform_int(0, 24));
    if (repl >= lower) ++repl;  // skip the original letter
    out.push_back({idx, original, repl});
  }
  return out;
}

GeneratedSample gen_ocr_sample(const OcrTaskSpec& spec, std::uint64_t seed, const std::string& id) {
  validate(spec);
  const auto glyph = measure_text("M", kOcrFontScale);
  const auto max_chars = static_cast<std::size_t>((kOcrCanvas.width - 2 * kMargin) / glyph.width);
  const auto lines = wrap(corrupted_text(spec), max_chars);
  const int needed = static_cast<int>(lines.size()) * (glyph.height + kLineGap) - kLineGap;
  if (needed > kOcrCanvas.height - 2 * kMargin) {
    throw InvalidArgument("text too long for the OCR canvas at the fixed font size");
  }

  Image img(kOcrCanvas.width, kOcrCanvas.height, kWhite);
  int y = (kOcrCanvas.height - needed) / 2;
  for (const auto& line : lines) {
    draw_text(img, line, kMargin, y, kBlack, kOcrFontScale);
    y += glyph.height + kLineGap;
  }
  gaussian_blur(img, blur_sigma(spec.blur));

  SampleRecord r;
  r.id = id;
  r.task = Task::kOcr;
  r.image_path = "images/" + id + ".png";
  r.ground_truth = OcrTruth{spec.text, spec.replacements, std::string(to_string(spec.blur))};
  r.prompt_id = "ocr";
  r.seed = seed;
  r.params["blur"] = std::string(to_string(spec.blur));
  return {std::move(img), std::move(r)};
}

}  // namespace v2r
