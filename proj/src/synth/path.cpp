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

#include "v2r/synth/path.hpp"

#include "v2r/error.hpp"
#include "v2r/image/draw.hpp"

namespace v2r {

void validate(const PathTaskSpec& spec) {
  if (spec.range.hi <= spec.range.lo) throw InvalidArgument("path range is empty");
  if (spec.points.size() < 2 || spec.points.size() > 6) {
    throw InvalidArgument("paths have 2 to 6 points");
  }
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const auto& p = spec.points[i];
    if (!spec.range.contains(p[0]) || !spec.range.contains(p[1])) {
      throw InvalidArgument("path point outside the range");
    }
    if (i > 0 && p == spec.points[i - 1]) {
      throw InvalidArgument("degenerate path: repeated consecutive point");
    }
  }
}

PathTaskSpec sample_path_spec(int point_count, ValueRange range, Rng& rng) {
  PathTaskSpec spec{range, {}};
  while (static_cast<int>(spec.points.size()) < point_count) {
    const GridPoint p{static_cast<int>(rng.uniform_int(range.lo, range.hi)),
                      static_cast<int>(rng.uniform_int(range.lo, range.hi))};
    if (!spec.points.empty() && spec.points.back() == p) continue;
    spec.points.push_back(p);
  }
  validate(spec);
  return spec;
}

GeneratedSample gen_path_sample(const PathTaskSpec& spec, std::uint64_t seed, const std::string& id) {
  validate(spec);
  const PlotStyle& style = kPlotStyle;
  Image img(style.canvas.width, style.canvas.height, style.background);
  const PlotFrame frame(spec.range, 2, style);
  draw_plot_frame(img, frame, false, style);

  std::vector<Point> px;
  for (const auto& p : spec.points) px.push_back(frame.to_pixel(p[0], p[1]));
  for (std::size_t i = 1; i < px.size(); ++i) {
    draw_line(img, px[i - 1], px[i], style.path_thickness, style.path_line);
  }
  for (std::size_t i = 1; i < px.size(); ++i) fill_disc(img, px[i], style.marker_radius, style.marker);
  fill_disc(img, px[0], style.start_marker_radius, style.start_marker);

  SampleRecord r;
  r.id = id;
  r.task = Task::kPath;
  r.image_path = "images/" + id + ".png";
  r.ground_truth = CoordinatePath{spec.points};
  r.prompt_id = "path";
  r.seed = seed;
  r.params["n"] = spec.points.size();
  r.params["range"] = {spec.range.lo, spec.range.hi};
  return {std::move(img), std::move(r)};
}

}  // namespace v2r
