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

#include "v2r/metrics/path.hpp"

#include <algorithm>
#include <set>

#include "v2r/error.hpp"

namespace v2r {

PathEval path_metrics(const std::optional<std::vector<GridPoint>>& pred,
                      const std::vector<GridPoint>& gt) {
  if (gt.empty()) throw InvalidArgument("path metrics: empty ground truth");
  PathEval e;
  if (!pred) return e;
  const std::set<GridPoint> gt_points(gt.begin(), gt.end());
  const std::size_t n = std::min(pred->size(), gt.size());
  std::size_t in_set = 0, in_place = 0;
  for (std::size_t i = 0; i < n; ++i) {
    in_set += gt_points.count((*pred)[i]);
    in_place += (*pred)[i] == gt[i] ? 1 : 0;
  }
  const double denom = static_cast<double>(gt.size());
  e.ema = *pred == gt ? 1.0 : 0.0;
  e.pm_ia = static_cast<double>(in_set) / denom;
  e.pm_sa = static_cast<double>(in_place) / denom;
  return e;
}

double point_accuracy(const std::vector<std::optional<IntTuple>>& preds, const std::vector<IntTuple>& gts) {
  if (preds.size() != gts.size()) throw InvalidArgument("point accuracy: length mismatch");
  if (gts.empty()) throw InvalidArgument("point accuracy: no samples");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < gts.size(); ++i) hits += preds[i] && *preds[i] == gts[i] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(gts.size());
}

PositionalCurve positional_accuracy_curve(const std::vector<PathSample>& samples) {
  PositionalCurve c;
  std::vector<std::size_t> hits;
  for (const auto& s : samples) {
    if (s.gt.size() > c.counts.size()) {
      c.counts.resize(s.gt.size(), 0);
      hits.resize(s.gt.size(), 0);
    }
    for (std::size_t i = 0; i < s.gt.size(); ++i) {
      ++c.counts[i];
      if (s.pred && i < s.pred->size() && (*s.pred)[i] == s.gt[i]) ++hits[i];
    }
  }
  for (std::size_t i = 0; i < c.counts.size(); ++i) {
    c.accuracy.push_back(static_cast<double>(hits[i]) / static_cast<double>(c.counts[i]));
  }
  return c;
}

}  // namespace v2r
