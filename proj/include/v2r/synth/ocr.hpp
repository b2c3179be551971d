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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "v2r/core/random.hpp"
#include "v2r/core/types.hpp"
#include "v2r/synth/coordinate.hpp"

namespace v2r {

enum class BlurLevel { kB0, kB1, kB2, kB3 };

std::string_view to_string(BlurLevel level);
BlurLevel parse_blur_level(std::string_view name);
// Gaussian sigma in pixels: B0 = 0 (no blur), B1 = 1, B2 = 2, B3 = 4.
double blur_sigma(BlurLevel level);

struct OcrTaskSpec {
  std::string text;
  std::vector<Replacement> replacements;
  BlurLevel blur = BlurLevel::kB0;

  friend bool operator==(const OcrTaskSpec&, const OcrTaskSpec&) = default;
};

// Throws InvalidArgument for duplicate or out-of-range indices, mismatched
// originals, or replacements equal to the original.
void validate(const OcrTaskSpec& spec);

std::string corrupted_text(const OcrTaskSpec& spec);

// Picks `count` distinct letter positions and a different lowercase letter
// for each.
std::vector<Replacement> sample_replacements(const std::string& text, int count, Rng& rng);

inline constexpr int kOcrFontScale = 2;
inline constexpr Canvas kOcrCanvas{672, 336};

// Word-wraps the corrupted text at a fixed font size; throws InvalidArgument
// when it does not fit the canvas.
GeneratedSample gen_ocr_sample(const OcrTaskSpec& spec, std::uint64_t seed, const std::string& id);

const std::vector<std::string>& default_ocr_texts();

}  // namespace v2r
