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

#include <filesystem>
#include <string>
#include <vector>

#include "v2r/diagnostics/matrix.hpp"

namespace v2r {

struct AlignmentGap {
  double matched = 0.0;     // mean cos(H_i, C_i)
  double mismatched = 0.0;  // mean cos(H_i, C_j), i != j; 0 for a single row
  double gap = 0.0;         // matched - mismatched
};

// Row i of `c` is the caption embedding for feature row i. Throws
// InvalidArgument for shape mismatches, empty input or zero-norm rows.
AlignmentGap alignment_gap(const Matrix& h, const Matrix& c);

struct ClusterStats {
  double intra = 0.0;  // mean Euclidean distance over same-label pairs
  double inter = 0.0;  // mean Euclidean distance over cross-label pairs
  double ratio = 0.0;  // intra / inter, 0 when inter is 0
};

// Throws InvalidArgument for fewer than two distinct labels or a label
// count different from rows(X).
ClusterStats cluster_stats(const Matrix& x, const std::vector<std::string>& labels);

// Projection of the centred rows onto the two leading principal axes. Each
// axis is signed so its largest-magnitude loading is positive; missing axes
// (fewer than two columns) project to 0.
Matrix principal_projection(const Matrix& x);

// CSV with header "id,label,pc1,pc2".
void write_projection_csv(const std::vector<std::string>& ids, const std::vector<std::string>& labels,
                          const Matrix& projection, const std::filesystem::path& path);

}  // namespace v2r
