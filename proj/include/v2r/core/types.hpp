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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace v2r {

enum class Task {
  kObject,
  kDirection,
  kCoordinate,
  kPath,
  kTextMatrix,
  kOcr,
  kExtendedBenchmark,
};

std::string_view to_string(Task task);
// Throws InvalidArgument for unknown names.
Task parse_task(std::string_view name);
const std::vector<Task>& all_tasks();

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// One point of the position x scale x rotation x context product.
struct Variation {
  Point position;        // object center, pixels
  double scale = 1.0;    // longer object side / min(W, H)
  double rotation = 0.0; // degrees, clockwise, [0, 360)
  std::string context;   // background id

  friend bool operator==(const Variation&, const Variation&) = default;
};

struct Label {
  std::string value;
  friend bool operator==(const Label&, const Label&) = default;
};

// Integer tuple with one or two components.
struct Coordinate {
  std::vector<int> values;
  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

using GridPoint = std::array<int, 2>;

struct CoordinatePath {
  std::vector<GridPoint> points;
  friend bool operator==(const CoordinatePath&, const CoordinatePath&) = default;
};

struct WordPlacement {
  std::string word;
  int row = 0;
  int col = 0;
  int count = 1;
  friend bool operator==(const WordPlacement&, const WordPlacement&) = default;
};

struct Replacement {
  int index = 0;
  char original = 0;
  char replacement = 0;
  friend bool operator==(const Replacement&, const Replacement&) = default;
};

struct OcrTruth {
  std::string source;  // uncorrupted text
  std::vector<Replacement> replacements;
  std::string blur;    // B0..B3
  friend bool operator==(const OcrTruth&, const OcrTruth&) = default;
};

using GroundTruth = std::variant<Label, Coordinate, CoordinatePath, WordPlacement, OcrTruth>;

// True when the alternative held by `truth` is the one `task` requires.
bool ground_truth_matches(Task task, const GroundTruth& truth);

struct SampleRecord {
  std::string id;
  Task task = Task::kObject;
  std::optional<std::string> image_path;  // relative to the manifest directory
  std::optional<Variation> variation;
  GroundTruth ground_truth;
  std::string prompt_id;
  std::uint64_t seed = 0;
  // Task parameters used for stratified reporting (grid cell, point count,
  // range, matrix size, ...). Always a JSON object.
  nlohmann::ordered_json params = nlohmann::ordered_json::object();

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct Weights {
  double consistency = 1.0;
  double stability = 1.0;
  double judge = 1.0;
};

struct Canvas {
  int width = 672;
  int height = 672;
  friend bool operator==(const Canvas&, const Canvas&) = default;
};

struct RunConfig {
  std::uint64_t master_seed = 0;
  int grid = 5;
  std::vector<double> scales{1.0 / 2, 1.0 / 3, 1.0 / 5, 1.0 / 10, 1.0 / 15, 1.0 / 20};
  std::vector<double> rotations{0, 45, 90, 135, 180, 225, 270, 315};
  std::vector<std::string> contexts{"solid/ffffff", "solid/000000"};
  std::string output_dir = "out";
  Weights weights;
  Canvas canvas;
};

// The ten default object categories.
const std::vector<std::string>& default_object_classes();

// The eight direction labels, clockwise from "up".
const std::vector<std::string>& direction_labels();

}  // namespace v2r
