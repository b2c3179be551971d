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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "v2r/core/types.hpp"
#include "v2r/synth/campaign.hpp"

namespace v2r {

struct GenerateOptions {
  std::vector<Task> tasks;
  RunConfig config;
  std::filesystem::path out_dir;
  CampaignPresets presets = default_presets();
  std::optional<std::filesystem::path> asset_root;       // builtin procedural assets when unset
  std::optional<std::filesystem::path> background_root;  // solid contexts only when unset
  unsigned threads = 1;
};

struct GenerateSummary {
  std::filesystem::path manifest;
  std::vector<std::pair<Task, std::size_t>> counts;
  std::size_t skipped = 0;  // variants whose object left the canvas
};

// Renders every selected task into `out_dir` and writes
// `out_dir/manifest.jsonl` with a header line. Throws InvalidArgument for an
// empty or duplicated task list and for tasks that cannot be generated.
GenerateSummary generate(const GenerateOptions& options);

}  // namespace v2r
