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

#include "v2r/variation/compose.hpp"

#include <cmath>
#include <sstream>

#include "v2r/core/variation_space.hpp"
#include "v2r/image/draw.hpp"
#include "v2r/variation/direction.hpp"

namespace v2r {

Composition apply_variation(const Asset& asset, const BackgroundBank& backgrounds,
                            const Variation& v, Canvas canvas, Task task) {
  if (!(v.scale > 0 && v.scale <= 1)) throw InvalidArgument("scale must lie in (0, 1]");
  if (!(v.rotation >= 0 && v.rotation < 360)) throw InvalidArgument("rotation must lie in [0, 360)");
  if (v.position.x < 0 || v.position.y < 0 || v.position.x > canvas.width ||
      v.position.y > canvas.height) {
    throw InvalidArgument("anchor lies outside the canvas");
  }

  GroundTruth truth = Label{asset.label()};
  if (task == Task::kDirection) truth = Label{remap_direction_label(asset.label(), v.rotation)};

  Image background = backgrounds.render(v.context, canvas);

  const Image scaled = asset.render(object_side(v.scale, canvas));
  const Image rotated = rotate_bilinear(scaled, v.rotation);
  const int left = static_cast<int>(std::lround(v.position.x - rotated.width() / 2.0));
  const int top = static_cast<int>(std::lround(v.position.y - rotated.height() / 2.0));
  const auto local = opaque_box(rotated);
  if (!local) throw InvalidArgument("asset vanished after rotation");
  const Box placed{left + local->x0, top + local->y0, left + local->x1, top + local->y1};
  if (placed.x0 < 0 || placed.y0 < 0 || placed.x1 > canvas.width || placed.y1 > canvas.height) {
    std::ostringstream msg;
    msg << "object box [" << placed.x0 << "," << placed.y0 << ")-(" << placed.x1 << ","
        << placed.y1 << ") exceeds the " << canvas.width << "x" << canvas.height << " canvas";
    throw OutOfBoundsError(msg.str());
  }
  composite_over(background, rotated, left, top);
  return {std::move(background), std::move(truth), placed};
}

}  // namespace v2r
