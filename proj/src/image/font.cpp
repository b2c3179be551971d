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

#include "v2r/image/font.hpp"

namespace v2r {

TextMetrics measure_text(std::string_view text, int scale) {
  return {static_cast<int>(text.size()) * font_detail::kGlyphWidth * scale,
          font_detail::kGlyphHeight * scale};
}

void draw_text(Image& image, std::string_view text, int x, int y, Rgba color, int scale) {
  using namespace font_detail;
  int pen = x;
  for (char ch : text) {
    int code = static_cast<unsigned char>(ch);
    if (code < 32 || code > 126) code = '?';
    const unsigned short* rows = kGlyphs[code - 32];
    for (int gy = 0; gy < kGlyphHeight; ++gy) {
      for (int gx = 0; gx < kGlyphWidth; ++gx) {
        if (!(rows[gy] & (1u << gx))) continue;
        for (int sy = 0; sy < scale; ++sy) {
          for (int sx = 0; sx < scale; ++sx) {
            const int px = pen + gx * scale + sx;
            const int py = y + gy * scale + sy;
            if (image.contains(px, py)) image.at(px, py) = color;
          }
        }
      }
    }
    pen += kGlyphWidth * scale;
  }
}

}  // namespace v2r
