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

#include <optional>
#include <vector>

#include "v2r/core/types.hpp"

namespace v2r {

struct PathEval {
  double ema = 0.0;    // 1 iff the sequences are equal
  double pm_ia = 0.0;  // positions i < |gt| whose pred[i] is any gt point, / |gt|
  double pm_sa = 0.0;  // positions i < |gt| with pred[i] == gt[i], / |gt|
};

// An absent prediction (unparseable answer) scores zero everywhere. Throws
// InvalidArgument for an empty ground truth.
PathEval path_metrics(const std::optional<std::vector<GridPoint>>& pred,
                      const std::vector<GridPoint>& gt);

using IntTuple = std::vector<int>;

// Fraction of samples whose prediction equals the ground truth exactly.
// Throws InvalidArgument for empty input or a length mismatch.
double point_accuracy(const std::vector<std::optional<IntTuple>>& preds,
                      const std::vector<IntTuple>& gts);

struct PathSample {
  std::optional<std::vector<GridPoint>> pred;
  std::vector<GridPoint> gt;
};

struct PositionalCurve {
  std::vector<double> accuracy;     // index i: fraction with pred[i] == gt[i]
  std::vector<std::size_t> counts;  // samples whose gt has index i
};

// Shorter paths contribute only to their own indices.
PositionalCurve positional_accuracy_curve(const std::vector<PathSample>& samples);

}  // namespace v2r
