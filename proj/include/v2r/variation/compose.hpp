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
#include "v2r/error.hpp"
#include "v2r/image/image.hpp"
#include "v2r/variation/assets.hpp"

namespace v2r {

// The rotated object does not fit on the canvas at the requested anchor.
class OutOfBoundsError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct Composition {
  Image image;
  GroundTruth ground_truth;
  Box object_box;  // placed opaque box of the object, canvas pixels
};

// Scales the asset so its longer side is round(scale * min(W, H)), rotates it
// clockwise about its centre with bilinear resampling, and composites it
// over the background with its centre on the anchor. Scale is applied
// before rotation.
//
// The ground truth is the asset label, remapped through the rotation for
// the direction task.
Composition apply_variation(const Asset& asset, const BackgroundBank& backgrounds,
                            const Variation& v, Canvas canvas, Task task);

}  // namespace v2r
