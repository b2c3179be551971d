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

#include <string_view>

#include "v2r/image/image.hpp"

namespace v2r {

namespace font_detail {
extern const int kGlyphWidth;
extern const int kGlyphHeight;
extern const int kGlyphBaseline;
extern const unsigned short kGlyphs[95][19];
}  // namespace font_detail

// Fixed-pitch bitmap font covering printable ASCII; other bytes render as '?'.
struct TextMetrics {
  int width = 0;
  int height = 0;
};

TextMetrics measure_text(std::string_view text, int scale = 1);

// Draws with the top-left of the first glyph cell at (x, y).
void draw_text(Image& image, std::string_view text, int x, int y, Rgba color, int scale = 1);

}  // namespace v2r
