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

#include "v2r/synth/plot.hpp"

#include <cmath>
#include <string>

#include "v2r/error.hpp"
#include "v2r/image/draw.hpp"
#include "v2r/image/font.hpp"

namespace v2r {

const std::vector<ValueRange>& standard_ranges() {
  static const std::vector<ValueRange> ranges{{-5, 5}, {-10, 10}, {0, 10}, {0, 20}};
  return ranges;
}

PlotFrame::PlotFrame(ValueRange range, int dimensions, const PlotStyle& style)
    : range_(range), dims_(dimensions) {
  if (range.hi <= range.lo) throw InvalidArgument("plot range is empty");
  if (dimensions != 1 && dimensions != 2) throw InvalidArgument("plots are 1D or 2D");
  left_ = style.margin;
  right_ = style.canvas.width - style.margin;
  top_ = style.margin;
  bottom_ = style.canvas.height - style.margin;
  axis_y_ = style.canvas.height / 2.0;
}

Point PlotFrame::to_pixel(double x, double y) const {
  const double span = range_.hi - range_.lo;
  const double px = left_ + (x - range_.lo) / span * (right_ - left_);
  if (dims_ == 1) return {px, axis_y_};
  return {px, bottom_ - (y - range_.lo) / span * (bottom_ - top_)};
}

Point PlotFrame::to_data(Point pixel) const {
  const double span = range_.hi - range_.lo;
  const double x = range_.lo + (pixel.x - left_) / (right_ - left_) * span;
  if (dims_ == 1) return {x, 0.0};
  return {x, range_.lo + (bottom_ - pixel.y) / (bottom_ - top_) * span};
}

namespace {

int tick_step(ValueRange r) { return (r.hi - r.lo) <= 10 ? 1 : 2; }

void centered_label(Image& img, const std::string& text, double cx, int top, Rgba color) {
  const auto m = measure_text(text);
  draw_text(img, text, static_cast<int>(std::lround(cx - m.width / 2.0)), top, color);
}

}  // namespace

void draw_plot_frame(Image& image, const PlotFrame& frame, bool grid, const PlotStyle& style) {
  const ValueRange r = frame.range();
  const int step = tick_step(r);
  if (frame.dimensions() == 2) {
    if (grid) {
      for (int v = r.lo; v <= r.hi; v += step) {
        const Point px = frame.to_pixel(v, r.lo);
        draw_line(image, {px.x, frame.top()}, {px.x, frame.bottom()}, style.grid_thickness, style.grid);
        const Point py = frame.to_pixel(r.lo, v);
        draw_line(image, {frame.left(), py.y}, {frame.right(), py.y}, style.grid_thickness, style.grid);
      }
    }
    draw_line(image, {frame.left(), frame.bottom()}, {frame.right(), frame.bottom()},
              style.axis_thickness, style.axis);
    draw_line(image, {frame.left(), frame.top()}, {frame.left(), frame.bottom()}, style.axis_thickness,
              style.axis);
    for (int v = r.lo; v <= r.hi; v += step) {
      const Point px = frame.to_pixel(v, r.lo);
      draw_line(image, {px.x, frame.bottom()}, {px.x, frame.bottom() + style.tick_length},
                style.axis_thickness, style.axis);
      centered_label(image, std::to_string(v), px.x,
                     static_cast<int>(frame.bottom()) + style.tick_length + 4, style.label);
      const Point py = frame.to_pixel(r.lo, v);
      draw_line(image, {frame.left() - style.tick_length, py.y}, {frame.left(), py.y},
                style.axis_thickness, style.axis);
      const std::string text = std::to_string(v);
      const auto m = measure_text(text);
      draw_text(image, text, static_cast<int>(frame.left()) - style.tick_length - 4 - m.width,
                static_cast<int>(std::lround(py.y - m.height / 2.0)), style.label);
    }
    return;
  }

  const double axis_y = frame.to_pixel(r.lo).y;
  if (grid) {
    for (int v = r.lo; v <= r.hi; v += step) {
      const Point p = frame.to_pixel(v);
      draw_line(image, {p.x, axis_y - 60}, {p.x, axis_y + 60}, style.grid_thickness, style.grid);
    }
  }
  draw_line(image, {frame.left(), axis_y}, {frame.right(), axis_y}, style.axis_thickness, style.axis);
  for (int v = r.lo; v <= r.hi; v += step) {
    const Point p = frame.to_pixel(v);
    draw_line(image, {p.x, axis_y}, {p.x, axis_y + style.tick_length}, style.axis_thickness,
              style.axis);
    centered_label(image, std::to_string(v), p.x,
                   static_cast<int>(axis_y) + style.tick_length + 4, style.label);
  }
}

}  // namespace v2r
