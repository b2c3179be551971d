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

#include "v2r/metrics/aggregate.hpp"

#include "v2r/core/config.hpp"
#include "v2r/error.hpp"

namespace v2r {
namespace {

void check_unit(const std::optional<double>& v, const char* name) {
  if (v && !(*v >= 0.0 && *v <= 1.0)) {
    throw InvalidArgument(std::string("aggregate: ") + name + " outside [0, 1]");
  }
}

}  // namespace

std::optional<double> stability_component(const StabilityScores& s) {
  if (s.semantic && s.token) return (*s.semantic + *s.token) / 2.0;
  if (s.semantic) return s.semantic;
  return s.token;
}

double aggregate_robustness(const StabilityScores& s, const Weights& w) {
  validate_weights(w);
  check_unit(s.consistency, "C_m");
  check_unit(s.semantic, "S_s");
  check_unit(s.token, "S_t");
  check_unit(s.judge, "judge");
  const auto stability = stability_component(s);
  double num = 0.0, den = 0.0;
  if (s.consistency) num += w.consistency * *s.consistency, den += w.consistency;
  if (stability) num += w.stability * *stability, den += w.stability;
  if (s.judge) num += w.judge * *s.judge, den += w.judge;
  if (!s.consistency && !stability && !s.judge) throw InvalidArgument("aggregate: no component present");
  if (den <= 0.0) throw InvalidArgument("aggregate: weights of the present components sum to zero");
  return num / den;
}

}  // namespace v2r
