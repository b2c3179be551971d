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

#include "v2r/core/types.hpp"

namespace v2r {

// Components in [0, 1]; absent ones are dropped and the remaining weights
// renormalized.
struct StabilityScores {
  std::optional<double> consistency;  // C_m
  std::optional<double> semantic;     // S_s
  std::optional<double> token;        // S_t
  std::optional<double> judge;
};

// Mean of the present stability components S_s and S_t.
std::optional<double> stability_component(const StabilityScores& s);

// Weighted mean over the present components (C_m, stability, judge).
// Throws InvalidArgument when nothing is present, a component lies outside
// [0, 1] or the present weights sum to zero.
double aggregate_robustness(const StabilityScores& scores, const Weights& weights);

}  // namespace v2r
