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

#include <cstddef>
#include <string>
#include <vector>

#include "v2r/core/types.hpp"

namespace v2r {

// The enumerable grid over position x scale x rotation x context.
//
// Positions are the cell centers of a uniform grid x grid partition of the
// canvas, stored row-major (index = row * grid + col). Enumeration order is
// position-major, then scale, rotation and context.
struct VariationSpace {
  Canvas canvas;
  int grid = 1;
  std::vector<Point> positions;
  std::vector<double> scales;
  std::vector<double> rotations;
  std::vector<std::string> contexts;

  std::size_t size() const {
    return positions.size() * scales.size() * rotations.size() * contexts.size();
  }

  struct Index {
    std::size_t position = 0;
    std::size_t scale = 0;
    std::size_t rotation = 0;
    std::size_t context = 0;
  };

  Index decompose(std::size_t flat) const;
  Variation at(std::size_t flat) const;

  friend bool operator==(const VariationSpace&, const VariationSpace&) = default;
};

// Builds the space for `config` on `canvas`. Throws InvalidArgument when the
// grid is empty, the canvas is smaller than 32 px, a list is empty or holds
// duplicates, a scale is outside (0, 1], a rotation is outside [0, 360), or
// some scale fits at no grid anchor.
VariationSpace build_variation_space(const RunConfig& config, Canvas canvas);

// Side length in pixels of an object drawn at `scale` on `canvas`.
int object_side(double scale, Canvas canvas);

}  // namespace v2r
