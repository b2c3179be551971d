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

#include <cstdint>
#include <string>
#include <utility>

#include "v2r/core/random.hpp"
#include "v2r/core/types.hpp"
#include "v2r/image/image.hpp"
#include "v2r/synth/plot.hpp"

namespace v2r {

struct CoordinateTaskSpec {
  int dimensions = 2;  // 1 or 2
  ValueRange range;
  bool reference_lines = false;
  bool grid = false;
  std::vector<int> point;  // `dimensions` components

  friend bool operator==(const CoordinateTaskSpec&, const CoordinateTaskSpec&) = default;
};

// Throws InvalidArgument when the dimensionality is not 1 or 2, or the point
// has the wrong arity or leaves the range.
void validate(const CoordinateTaskSpec& spec);

// Draws a uniformly random integer point for the given layout.
CoordinateTaskSpec sample_coordinate_spec(int dimensions, ValueRange range, bool reference_lines,
                                          bool grid, Rng& rng);

struct GeneratedSample {
  Image image;
  SampleRecord record;
};

// Renders one marked point. The record's image_path is "images/<id>.png".
GeneratedSample gen_coordinate_sample(const CoordinateTaskSpec& spec, std::uint64_t seed,
                                      const std::string& id);

}  // namespace v2r
