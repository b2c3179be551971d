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

#include "v2r/core/types.hpp"

#include <array>
#include <utility>

#include "v2r/error.hpp"

namespace v2r {
namespace {

constexpr std::array<std::pair<Task, std::string_view>, 7> kTaskNames{{
    {Task::kObject, "object"},
    {Task::kDirection, "direction"},
    {Task::kCoordinate, "coordinate"},
    {Task::kPath, "path"},
    {Task::kTextMatrix, "text-matrix"},
    {Task::kOcr, "ocr"},
    {Task::kExtendedBenchmark, "extended-benchmark"},
}};

}  // namespace

std::string_view to_string(Task task) {
  for (const auto& [t, name] : kTaskNames) {
    if (t == task) return name;
  }
  return "unknown";
}

Task parse_task(std::string_view name) {
  for (const auto& [t, n] : kTaskNames) {
    if (n == name) return t;
  }
  throw InvalidArgument("unknown task '" + std::string(name) + "'");
}

const std::vector<Task>& all_tasks() {
  static const std::vector<Task> tasks = [] {
    std::vector<Task> out;
    for (const auto& [t, _] : kTaskNames) out.push_back(t);
    return out;
  }();
  return tasks;
}

bool ground_truth_matches(Task task, const GroundTruth& truth) {
  switch (task) {
    case Task::kObject:
    case Task::kDirection:
    case Task::kExtendedBenchmark:
      return std::holds_alternative<Label>(truth);
    case Task::kCoordinate:
      return std::holds_alternative<Coordinate>(truth);
    case Task::kPath:
      return std::holds_alternative<CoordinatePath>(truth);
    case Task::kTextMatrix:
      return std::holds_alternative<WordPlacement>(truth);
    case Task::kOcr:
      return std::holds_alternative<OcrTruth>(truth);
  }
  return false;
}

const std::vector<std::string>& default_object_classes() {
  static const std::vector<std::string> classes{
      "shiba dog", "cat", "bear", "eagle", "snake", "panda", "turtle", "fish", "car", "plane"};
  return classes;
}

const std::vector<std::string>& direction_labels() {
  static const std::vector<std::string> labels{
      "up", "top-right", "right", "bottom-right", "down", "bottom-left", "left", "top-left"};
  return labels;
}

}  // namespace v2r
