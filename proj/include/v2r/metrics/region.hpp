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

#include <vector>

namespace v2r {

struct RegionBias {
  double middle = 0.0;       // NaN when no middle cell has a value
  double surrounding = 0.0;  // NaN when no surrounding cell has a value
  std::size_t middle_cells = 0;
  std::size_t surrounding_cells = 0;
};

// True when the centre of cell i of G lies in the closed central third of
// the axis, i.e. 1/3 <= (i + 1/2) / G <= 2/3.
bool is_middle_index(int i, int grid);

// Mean of a G x G row-major per-anchor metric map over cells central on
// both axes versus all others. NaN cells are treated as missing. Throws
// InvalidArgument for G < 3 or a size mismatch.
RegionBias region_bias(const std::vector<double>& grid_values, int grid);

}  // namespace v2r
