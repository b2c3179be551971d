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

#include "v2r/synth/coordinate.hpp"

#include <cmath>

#include "v2r/error.hpp"
#include "v2r/image/draw.hpp"

namespace v2r {
namespace {

void dashed_line(Image& img, Point a, Point b, const PlotStyle& style) {
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  if (len <= 0) return;
  const double dash = style.reference_dash;
  for (double t = 0; t < len; t += 2 * dash) {
    const double t1 = std::min(t + dash, len);
    const Point p0{a.x + (b.x - a.x) * t / len, a.y + (b.y - a.y) * t / len};
    const Point p1{a.x + (b.x - a.x) * t1 / len, a.y + (b.y - a.y) * t1 / len};
    draw_line(img, p0, p1, style.reference_thickness, style.reference);
  }
}

}  // namespace

void validate(const CoordinateTaskSpec& spec) {
  if (spec.dimensions != 1 && spec.dimensions != 2) {
    throw InvalidArgument("coordinate plots are 1D or 2D");
  }
  if (spec.range.hi <= spec.range.lo) throw InvalidArgument("coordinate range is empty");
  if (static_cast<int>(spec.point.size()) != spec.dimensions) {
    throw InvalidArgument("point arity does not match dimensionality");
  }
  for (int v : spec.point) {
    if (!spec.range.contains(v)) throw InvalidArgument("point component outside the range");
  }
}

CoordinateTaskSpec sample_coordinate_spec(int dimensions, ValueRange range, bool reference_lines,
                                          bool grid, Rng& rng) {
  CoordinateTaskSpec spec{dimensions, range, reference_lines, grid, {}};
  for (int d = 0; d < dimensions; ++d) {
    spec.point.push_back(static_cast<int>(rng.uniform_int(range.lo, range.hi)));
  }
  validate(spec);
  return spec;
}

GeneratedSample gen_coordinate_sample(const CoordinateTaskSpec& spec, std::uint64_t seed,
                                      const std::string& id) {
  validate(spec);
  const PlotStyle& style = kPlotStyle;
  Image img(style.canvas.width, style.canvas.height, style.background);
  const PlotFrame frame(spec.range, spec.dimensions, style);
  draw_plot_frame(img, frame, spec.grid, style);

  const double y = spec.dimensions == 2 ? spec.point[1] : 0.0;
  const Point p = frame.to_pixel(spec.point[0], y);
  if (spec.reference_lines) {
    if (spec.dimensions == 2) {
      dashed_line(img, p, {p.x, frame.bottom()}, style);
      dashed_line(img, p, {frame.left(), p.y}, style);
    } else {
      dashed_line(img, {p.x, p.y - 48}, {p.x, p.y + 48}, style);
    }
  }
  fill_disc(img, p, style.marker_radius, style.marker);

  SampleRecord r;
  r.id = id;
  r.task = Task::kCoordinate;
  r.image_path = "images/" + id + ".png";
  r.ground_truth = Coordinate{spec.point};
  r.prompt_id = "coordinate";
  r.seed = seed;
  r.params["dimensions"] = spec.dimensions;
  r.params["range"] = {spec.range.lo, spec.range.hi};
  r.params["grid"] = spec.grid;
  r.params["reference_lines"] = spec.reference_lines;
  return {std::move(img), std::move(r)};
}

}  // namespace v2r
