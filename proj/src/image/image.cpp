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

#include "v2r/image/image.hpp"

#include <algorithm>

#include "v2r/error.hpp"

namespace v2r {

Image::Image(int width, int height, Rgba fill) : width_(width), height_(height) {
  if (width < 0 || height < 0) throw InvalidArgument("negative image size");
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

namespace {

template <typename Pred>
std::optional<Box> bounding_box(const Image& image, Pred&& pred) {
  Box box{image.width(), image.height(), 0, 0};
  bool any = false;
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      if (!pred(image.at(x, y))) continue;
      any = true;
      box.x0 = std::min(box.x0, x);
      box.y0 = std::min(box.y0, y);
      box.x1 = std::max(box.x1, x + 1);
      box.y1 = std::max(box.y1, y + 1);
    }
  }
  if (!any) return std::nullopt;
  return box;
}

}  // namespace

std::optional<Box> opaque_box(const Image& image) {
  return bounding_box(image, [](const Rgba& p) { return p.a > 0; });
}

std::optional<Box> box_differing_from(const Image& image, Rgba background) {
  return bounding_box(image, [&](const Rgba& p) { return p != background; });
}

Image crop(const Image& image, const Box& box) {
  if (box.x0 < 0 || box.y0 < 0 || box.x1 > image.width() || box.y1 > image.height() ||
      box.width() < 0 || box.height() < 0) {
    throw InvalidArgument("crop box outside image");
  }
  Image out(box.width(), box.height());
  for (int y = 0; y < box.height(); ++y) {
    for (int x = 0; x < box.width(); ++x) out.at(x, y) = image.at(box.x0 + x, box.y0 + y);
  }
  return out;
}

}  // namespace v2r
