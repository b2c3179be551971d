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
#include <vector>

#include <json.hpp>

#include "v2r/synth/coordinate.hpp"
#include "v2r/synth/ocr.hpp"
#include "v2r/synth/path.hpp"
#include "v2r/synth/text_matrix.hpp"

namespace v2r {

struct CoordinateCampaign {
  std::vector<ValueRange> ranges;
  std::vector<int> dimensions;
  std::vector<bool> grid;
  std::vector<bool> reference_lines;
  int per_config = 10;
};

struct PathCampaign {
  std::vector<int> point_counts;
  std::vector<ValueRange> ranges;
  int per_config = 100;
};

struct TextCampaign {
  std::vector<int> sizes;
  std::vector<std::string> words;
  std::vector<MatrixBackground> backgrounds;
  int per_config = 1;
};

struct OcrCampaign {
  std::vector<std::string> texts;
  std::vector<BlurLevel> blur_levels;
  int replacements = 3;
};

struct CampaignPresets {
  CoordinateCampaign coordinate;
  PathCampaign path;
  TextCampaign text;
  OcrCampaign ocr;
};

// Presets mirroring the published experiment settings (data/presets.json).
CampaignPresets default_presets();
// Throws InvalidArgument naming the offending field.
CampaignPresets presets_from_json(const nlohmann::json& j);

// Planning is pure: spec i is drawn from derive_seed(master, task, i).
std::vector<CoordinateTaskSpec> plan_coordinate_campaign(const CoordinateCampaign& c,
                                                         std::uint64_t master_seed);
std::vector<PathTaskSpec> plan_path_campaign(const PathCampaign& c, std::uint64_t master_seed);
std::vector<TextMatrixSpec> plan_text_campaign(const TextCampaign& c, std::uint64_t master_seed);
// Every text gets one replacement set shared by all blur levels.
std::vector<OcrTaskSpec> plan_ocr_campaign(const OcrCampaign& c, std::uint64_t master_seed);

// Render and write files under `out_dir` (images/ and texts/), returning
// records in plan order.
std::vector<SampleRecord> render_coordinate_campaign(const std::vector<CoordinateTaskSpec>& specs,
                                                     const std::filesystem::path& out_dir,
                                                     std::uint64_t master_seed, unsigned threads = 1);
std::vector<SampleRecord> render_path_campaign(const std::vector<PathTaskSpec>& specs,
                                               const std::filesystem::path& out_dir,
                                               std::uint64_t master_seed, unsigned threads = 1);
std::vector<SampleRecord> render_text_campaign(const std::vector<TextMatrixSpec>& specs,
                                               const std::filesystem::path& out_dir,
                                               std::uint64_t master_seed);
std::vector<SampleRecord> render_ocr_campaign(const std::vector<OcrTaskSpec>& specs,
                                              const std::filesystem::path& out_dir,
                                              std::uint64_t master_seed, unsigned threads = 1);

}  // namespace v2r
