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

#include "v2r/core/variation_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "v2r/error.hpp"

namespace v2r {
namespace {

template <typename T>
void require_unique_nonempty(const std::vector<T>& values, const char* name) {
  if (values.empty()) throw InvalidArgument(std::string(name) + " list is empty");
  std::set<T> seen(values.begin(), values.end());
  if (seen.size() != values.size()) {
    throw InvalidArgument(std::string(name) + " list contains duplicates");
  }
}

bool fits_at(const Point& anchor, int side, Canvas canvas) {
  const double half = side / 2.0;
  return anchor.x - half >= 0.0 && anchor.y - half >= 0.0 && anchor.x + half <= canvas.width &&
         anchor.y + half <= canvas.height;
}

}  // namespace

VariationSpace::Index VariationSpace::decompose(std::size_t flat) const {
  if (flat >= size()) throw InvalidArgument("variation index out of range");
  Index idx;
  idx.context = flat % contexts.size();
  flat /= contexts.size();
  idx.rotation = flat % rotations.size();
  flat /= rotations.size();
  idx.scale = flat % scales.size();
  idx.position = flat / scales.size();
  return idx;
}

Variation VariationSpace::at(std::size_t flat) const {
  const Index idx = decompose(flat);
  return Variation{positions[idx.position], scales[idx.scale], rotations[idx.rotation],
                   contexts[idx.context]};
}

int object_side(double scale, Canvas canvas) {
  const int side = static_cast<int>(std::lround(scale * std::min(canvas.width, canvas.height)));
  return std::max(side, 1);
}

VariationSpace build_variation_space(const RunConfig& config, Canvas canvas) {
  if (config.grid < 1) throw InvalidArgument("grid resolution must be >= 1");
  if (canvas.width < 32 || canvas.height < 32) {
    throw InvalidArgument("canvas must be at least 32x32 pixels");
  }
  if (config.grid > std::min(canvas.width, canvas.height)) {
    throw InvalidArgument("grid resolution exceeds canvas size");
  }
  require_unique_nonempty(config.scales, "scale");
  require_unique_nonempty(config.rotations, "rotation");
  require_unique_nonempty(config.contexts, "context");
  for (double s : config.scales) {
    if (!(s > 0.0 && s <= 1.0)) throw InvalidArgument("scale must lie in (0, 1]");
  }
  for (double r : config.rotations) {
    if (!(r >= 0.0 && r < 360.0)) throw InvalidArgument("rotation must lie in [0, 360)");
  }

  VariationSpace space;
  space.canvas = canvas;
  space.grid = config.grid;
  const double cell_w = static_cast<double>(canvas.width) / config.grid;
  const double cell_h = static_cast<double>(canvas.height) / config.grid;
  for (int row = 0; row < config.grid; ++row) {
    for (int col = 0; col < config.grid; ++col) {
      space.positions.push_back({(col + 0.5) * cell_w, (row + 0.5) * cell_h});
    }
  }

  // A scale that fits at no anchor would yield a dimension made only of
  // skipped samples.
  for (double s : config.scales) {
    const int side = object_side(s, canvas);
    const bool any = std::any_of(space.positions.begin(), space.positions.end(),
                                 [&](const Point& p) { return fits_at(p, side, canvas); });
    if (!any) {
      std::ostringstream msg;
      msg << "sizing error: an object at scale " << s << " (" << side
          << " px) fits at no anchor of the " << config.grid << "x" << config.grid << " grid";
      throw InvalidArgument(msg.str());
    }
  }

  space.scales = config.scales;
  space.rotations = config.rotations;
  space.contexts = config.contexts;
  return space;
}

}  // namespace v2r
