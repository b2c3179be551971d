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

#include "v2r/report/generate.hpp"

#include <set>

#include "v2r/core/manifest.hpp"
#include "v2r/core/variation_space.hpp"
#include "v2r/core/version.hpp"
#include "v2r/error.hpp"
#include "v2r/variation/assets.hpp"
#include "v2r/variation/enumerate.hpp"

namespace v2r {

GenerateSummary generate(const GenerateOptions& options) {
  if (options.tasks.empty()) throw InvalidArgument("no task selected");
  std::set<Task> seen;
  for (Task t : options.tasks) {
    if (!seen.insert(t).second) throw InvalidArgument("task " + std::string(to_string(t)) + " listed twice");
    if (t == Task::kExtendedBenchmark) {
      throw InvalidArgument("extended-benchmark records are imported, not generated");
    }
  }

  const RunConfig& cfg = options.config;
  const std::uint64_t seed = cfg.master_seed;
  const std::filesystem::path& out = options.out_dir;
  GenerateSummary summary;
  std::vector<SampleRecord> records;
  nlohmann::ordered_json skipped = nlohmann::ordered_json::object();

  for (Task task : options.tasks) {
    std::vector<SampleRecord> batch;
    switch (task) {
      case Task::kObject:
      case Task::kDirection: {
        std::vector<Asset> assets;
        if (options.asset_root) {
          assets = load_asset_bank(*options.asset_root, task);
        } else if (task == Task::kDirection) {
          assets.push_back(builtin_arrow());
        } else {
          assets = builtin_object_assets();
        }
        const BackgroundBank bank =
            options.background_root ? BackgroundBank::from_directory(*options.background_root) : BackgroundBank{};
        const VariationSpace space = build_variation_space(cfg, cfg.canvas);
        EnumerationOptions eo;
        eo.task = task;
        eo.out_dir = out;
        eo.master_seed = seed;
        eo.threads = options.threads;
        auto result = enumerate_variants(assets, bank, space, eo);
        batch = std::move(result.records);
        summary.skipped += result.skipped.size();
        skipped[std::string(to_string(task))] = result.skipped.size();
        break;
      }
      case Task::kCoordinate:
        batch = render_coordinate_campaign(plan_coordinate_campaign(options.presets.coordinate, seed), out, seed,
                                           options.threads);
        break;
      case Task::kPath:
        batch = render_path_campaign(plan_path_campaign(options.presets.path, seed), out, seed, options.threads);
        break;
      case Task::kTextMatrix:
        batch = render_text_campaign(plan_text_campaign(options.presets.text, seed), out, seed);
        break;
      case Task::kOcr:
        batch = render_ocr_campaign(plan_ocr_campaign(options.presets.ocr, seed), out, seed, options.threads);
        break;
      case Task::kExtendedBenchmark:
        break;
    }
    summary.counts.emplace_back(task, batch.size());
    for (auto& r : batch) records.push_back(std::move(r));
  }

  ManifestHeader header;
  header.canvas = cfg.canvas;
  header.seed = seed;
  header.tool_version = kVersion;
  nlohmann::ordered_json tasks = nlohmann::ordered_json::array();
  for (Task t : options.tasks) tasks.push_back(std::string(to_string(t)));
  header.extra["tasks"] = tasks;
  header.extra["grid"] = cfg.grid;
  if (!skipped.empty()) header.extra["skipped"] = skipped;

  summary.manifest = out / "manifest.jsonl";
  write_manifest(records, summary.manifest, header);
  return summary;
}

}  // namespace v2r
