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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "v2r/core/types.hpp"

namespace v2r {

// Optional first line of a manifest carrying run metadata.
struct ManifestHeader {
  Canvas canvas;
  std::uint64_t seed = 0;
  std::string tool_version;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  friend bool operator==(const ManifestHeader&, const ManifestHeader&) = default;
};

struct Manifest {
  std::optional<ManifestHeader> header;
  std::vector<SampleRecord> records;
};

nlohmann::ordered_json record_to_json(const SampleRecord& record);
// Throws FormatError when the object does not describe a valid record.
SampleRecord record_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json ground_truth_to_json(const GroundTruth& truth);
GroundTruth ground_truth_from_json(Task task, const nlohmann::ordered_json& j);

// One JSON object per line, fixed field order. Throws InvalidArgument on
// duplicate ids or invalid records, IoError when the file cannot be written.
void write_manifest(const std::vector<SampleRecord>& records, const std::filesystem::path& path,
                    const std::optional<ManifestHeader>& header = std::nullopt);

// Throws FormatError naming the line number for malformed lines and
// duplicate ids.
Manifest read_manifest(const std::filesystem::path& path);

}  // namespace v2r
