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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "v2r/core/types.hpp"
#include "v2r/core/variation_space.hpp"
#include "v2r/variation/assets.hpp"

namespace v2r {

struct EnumerationOptions {
  Task task = Task::kDirection;
  std::filesystem::path out_dir;        // manifest directory
  std::string image_subdir = "images";  // relative to out_dir
  std::uint64_t master_seed = 0;
  std::string prompt_id;                // defaults to the task name
  unsigned threads = 1;
};

struct SkippedVariant {
  std::string id;
  Variation variation;
  std::string reason;
};

struct EnumerationResult {
  std::vector<SampleRecord> records;
  std::vector<SkippedVariant> skipped;
};

// Writes one image and record per (asset, variation) pair in enumeration
// order. Combinations whose object leaves the canvas are reported in
// `skipped`; records + skipped always covers the full product.
EnumerationResult enumerate_variants(const std::vector<Asset>& assets,
                                     const BackgroundBank& backgrounds,
                                     const VariationSpace& space,
                                     const EnumerationOptions& options);

}  // namespace v2r
