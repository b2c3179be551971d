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

#include <vector>

#include "v2r/core/types.hpp"
#include "v2r/image/image.hpp"

namespace v2r {

// Shapes are rasterized by sampling pixel centers; no anti-aliasing, so an
// exact color identifies the shape that produced it.
void fill(Image& image, Rgba color);
void fill_rect(Image& image, const Box& box, Rgba color);
void fill_disc(Image& image, Point center, double radius, Rgba color);
void fill_ellipse(Image& image, Point center, double rx, double ry, Rgba color);
// Even-odd fill.
void fill_polygon(Image& image, const std::vector<Point>& vertices, Rgba color);
void draw_line(Image& image, Point a, Point b, double thickness, Rgba color);

// Porter-Duff "over" of `src` onto `dst` with src's top-left at (x, y).
void composite_over(Image& dst, const Image& src, int x, int y);

// Bilinear resampling in premultiplied alpha.
Image resize_bilinear(const Image& src, int width, int height);

// Rotates clockwise by `degrees` about the image center. The result is sized
// to the rotated bounds; uncovered pixels are transparent. Quarter turns are
// exact pixel permutations.
Image rotate_bilinear(const Image& src, double degrees);

// Separable Gaussian blur with clamp-to-edge borders; sigma <= 0 is a no-op.
void gaussian_blur(Image& image, double sigma);

}  // namespace v2r
