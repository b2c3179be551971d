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

#include "v2r/core/random.hpp"
#include "v2r/core/types.hpp"
#include "v2r/synth/coordinate.hpp"
#include "v2r/synth/plot.hpp"

namespace v2r {

struct PathTaskSpec {
  ValueRange range;
  std::vector<GridPoint> points;  // 2..6 points, consecutive points distinct

  friend bool operator==(const PathTaskSpec&, const PathTaskSpec&) = default;
};

void validate(const PathTaskSpec& spec);

// Uniform points without consecutive repeats; self-intersections allowed.
PathTaskSpec sample_path_spec(int point_count, ValueRange range, Rng& rng);

// Renders the polyline, a marker on every vertex and a distinct start
// marker. The record stores n and range in params.
GeneratedSample gen_path_sample(const PathTaskSpec& spec, std::uint64_t seed, const std::string& id);

}  // namespace v2r
