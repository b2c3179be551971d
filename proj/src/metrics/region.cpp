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

#include "v2r/metrics/region.hpp"

#include <cmath>
#include <limits>

#include "v2r/error.hpp"

namespace v2r {

bool is_middle_index(int i, int grid) {
  // Integer form of 1/3 <= (2i + 1) / (2G) <= 2/3.
  const long long c = 3LL * (2LL * i + 1);
  return c >= 2LL * grid && c <= 4LL * grid;
}

RegionBias region_bias(const std::vector<double>& values, int grid) {
  if (grid < 3) throw InvalidArgument("region bias needs a grid of at least 3");
  if (values.size() != static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid)) {
    throw InvalidArgument("region bias: expected G*G values");
  }
  double mid = 0.0, sur = 0.0;
  RegionBias r;
  for (int row = 0; row < grid; ++row) {
    for (int col = 0; col < grid; ++col) {
      const double v = values[static_cast<std::size_t>(row * grid + col)];
      if (std::isnan(v)) continue;
      if (is_middle_index(row, grid) && is_middle_index(col, grid)) {
        mid += v;
        ++r.middle_cells;
      } else {
        sur += v;
        ++r.surrounding_cells;
      }
    }
  }
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  r.middle = r.middle_cells ? mid / static_cast<double>(r.middle_cells) : nan;
  r.surrounding = r.surrounding_cells ? sur / static_cast<double>(r.surrounding_cells) : nan;
  return r;
}

}  // namespace v2r
