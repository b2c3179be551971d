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

#include "v2r/variation/direction.hpp"

#include <algorithm>
#include <cmath>

#include "v2r/core/types.hpp"
#include "v2r/error.hpp"

namespace v2r {

bool is_direction_label(std::string_view label) {
  const auto& labels = direction_labels();
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

std::string remap_direction_label(std::string_view label, double rotation) {
  const auto& labels = direction_labels();
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw InvalidArgument("unknown direction label '" + std::string(label) + "'");
  }
  const double steps = rotation / 45.0;
  if (!std::isfinite(steps) || steps != std::floor(steps)) {
    throw InvalidArgument("direction rotation must be a multiple of 45 degrees");
  }
  auto k = static_cast<long long>(steps) % 8;
  if (k < 0) k += 8;
  const auto start = static_cast<long long>(it - labels.begin());
  return labels[static_cast<std::size_t>((start + k) % 8)];
}

}  // namespace v2r
