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

#include "v2r/core/types.hpp"
#include "v2r/image/image.hpp"

namespace v2r {

// Every rendering constant for the synthetic plots lives here.
struct PlotStyle {
  Canvas canvas{672, 672};
  int margin = 72;
  Rgba background = kWhite;
  Rgba axis = kBlack;
  double axis_thickness = 2.0;
  Rgba grid = {215, 215, 215, 255};
  double grid_thickness = 1.0;
  Rgba reference = {150, 150, 150, 255};
  double reference_thickness = 1.5;
  int reference_dash = 8;
  Rgba label = kBlack;
  int tick_length = 6;
  Rgba marker = {220, 20, 60, 255};
  double marker_radius = 7.0;
  Rgba start_marker = {20, 160, 60, 255};
  double start_marker_radius = 9.0;
  Rgba path_line = {30, 90, 200, 255};
  double path_thickness = 3.0;
};

inline constexpr PlotStyle kPlotStyle{};

struct ValueRange {
  int lo = 0;
  int hi = 10;

  bool contains(int v) const { return v >= lo && v <= hi; }
  friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

// Ranges used by the coordinate and path campaigns.
const std::vector<ValueRange>& standard_ranges();

// Affine map between data coordinates and pixel coordinates. In one
// dimension every point sits on a horizontal axis through the canvas
// middle.
class PlotFrame {
 public:
  PlotFrame(ValueRange range, int dimensions, const PlotStyle& style = kPlotStyle);

  Point to_pixel(double x, double y = 0.0) const;
  // Inverse of to_pixel; y is 0 for one-dimensional frames.
  Point to_data(Point pixel) const;

  ValueRange range() const { return range_; }
  int dimensions() const { return dims_; }
  double left() const { return left_; }
  double right() const { return right_; }
  double top() const { return top_; }
  double bottom() const { return bottom_; }

 private:
  ValueRange range_;
  int dims_;
  double left_, right_, top_, bottom_;
  double axis_y_;
};

// Axes, ticks and labels, plus optional grid lines.
void draw_plot_frame(Image& image, const PlotFrame& frame, bool grid,
                     const PlotStyle& style = kPlotStyle);

}  // namespace v2r
