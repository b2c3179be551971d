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

#include "v2r/core/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "v2r/error.hpp"

namespace v2r {
namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::ordered_json;

constexpr const char* kHeaderKey = "manifest_header";

ojson variation_to_json(const Variation& v) {
  ojson j;
  j["position"] = {v.position.x, v.position.y};
  j["scale"] = v.scale;
  j["rotation"] = v.rotation;
  j["context"] = v.context;
  return j;
}

Variation variation_from_json(const json& j) {
  Variation v;
  const auto& pos = j.at("position");
  if (!pos.is_array() || pos.size() != 2) throw FormatError("variation.position must be [x, y]");
  v.position = {pos[0].get<double>(), pos[1].get<double>()};
  v.scale = j.at("scale").get<double>();
  v.rotation = j.at("rotation").get<double>();
  v.context = j.at("context").get<std::string>();
  return v;
}

char single_char(const json& j, const char* what) {
  const auto s = j.get<std::string>();
  if (s.size() != 1) throw FormatError(std::string(what) + " must be a single character");
  return s[0];
}

void validate_record(const SampleRecord& r) {
  if (r.id.empty()) throw InvalidArgument("record id is empty");
  if (!ground_truth_matches(r.task, r.ground_truth)) {
    throw InvalidArgument("record " + r.id + ": ground truth type does not match task " +
                          std::string(to_string(r.task)));
  }
  if (r.variation) {
    const auto& v = *r.variation;
    if (!(v.scale > 0.0 && v.scale <= 1.0)) {
      throw InvalidArgument("record " + r.id + ": scale outside (0, 1]");
    }
    if (!(v.rotation >= 0.0 && v.rotation < 360.0)) {
      throw InvalidArgument("record " + r.id + ": rotation outside [0, 360)");
    }
  }
  if (!r.params.is_object()) throw InvalidArgument("record " + r.id + ": params must be an object");
}

}  // namespace

ojson ground_truth_to_json(const GroundTruth& truth) {
  return std::visit(
      [](const auto& gt) -> ojson {
        using T = std::decay_t<decltype(gt)>;
        if constexpr (std::is_same_v<T, Label>) {
          return gt.value;
        } else if constexpr (std::is_same_v<T, Coordinate>) {
          return gt.values;
        } else if constexpr (std::is_same_v<T, CoordinatePath>) {
          ojson arr = ojson::array();
          for (const auto& p : gt.points) arr.push_back({p[0], p[1]});
          return arr;
        } else if constexpr (std::is_same_v<T, WordPlacement>) {
          return ojson{{"word", gt.word}, {"row", gt.row}, {"col", gt.col}, {"count", gt.count}};
        } else {
          ojson reps = ojson::array();
          for (const auto& r : gt.replacements) {
            reps.push_back({r.index, std::string(1, r.original), std::string(1, r.replacement)});
          }
          return ojson{{"text", gt.source}, {"replacements", reps}, {"blur", gt.blur}};
        }
      },
      truth);
}

GroundTruth ground_truth_from_json(Task task, const json& j) {
  switch (task) {
    case Task::kObject:
    case Task::kDirection:
    case Task::kExtendedBenchmark:
      return Label{j.get<std::string>()};
    case Task::kCoordinate: {
      Coordinate c{j.get<std::vector<int>>()};
      if (c.values.empty() || c.values.size() > 2) {
        throw FormatError("coordinate ground truth must have 1 or 2 components");
      }
      return c;
    }
    case Task::kPath: {
      CoordinatePath p;
      for (const auto& pt : j) {
        if (!pt.is_array() || pt.size() != 2) throw FormatError("path points must be [x, y]");
        p.points.push_back({pt[0].get<int>(), pt[1].get<int>()});
      }
      return p;
    }
    case Task::kTextMatrix:
      return WordPlacement{j.at("word").get<std::string>(), j.at("row").get<int>(),
                           j.at("col").get<int>(), j.at("count").get<int>()};
    case Task::kOcr: {
      OcrTruth o;
      o.source = j.at("text").get<std::string>();
      o.blur = j.at("blur").get<std::string>();
      for (const auto& r : j.at("replacements")) {
        if (!r.is_array() || r.size() != 3) {
          throw FormatError("replacements must be [index, original, replacement]");
        }
        o.replacements.push_back(
            {r[0].get<int>(), single_char(r[1], "original"), single_char(r[2], "replacement")});
      }
      return o;
    }
  }
  throw FormatError("unsupported task");
}

ojson record_to_json(const SampleRecord& r) {
  ojson j;
  j["id"] = r.id;
  j["task"] = std::string(to_string(r.task));
  if (r.image_path) j["image_path"] = *r.image_path;
  if (r.variation) j["variation"] = variation_to_json(*r.variation);
  j["ground_truth"] = ground_truth_to_json(r.ground_truth);
  j["prompt_id"] = r.prompt_id;
  j["seed"] = r.seed;
  if (!r.params.empty()) j["params"] = r.params;
  return j;
}

SampleRecord record_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("record is not an object");
  SampleRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.task = parse_task(j.at("task").get<std::string>());
    if (auto it = j.find("image_path"); it != j.end()) r.image_path = it->get<std::string>();
    if (auto it = j.find("variation"); it != j.end()) r.variation = variation_from_json(*it);
    r.ground_truth = ground_truth_from_json(r.task, j.at("ground_truth"));
    r.prompt_id = j.at("prompt_id").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (auto it = j.find("params"); it != j.end()) {
      r.params = *it;
      if (!r.params.is_object()) throw FormatError("params must be an object");
    }
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
  try {
    validate_record(r);
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
  return r;
}

void write_manifest(const std::vector<SampleRecord>& records, const std::filesystem::path& path,
                    const std::optional<ManifestHeader>& header) {
  std::set<std::string> ids;
  for (const auto& r : records) {
    validate_record(r);
    if (!ids.insert(r.id).second) throw InvalidArgument("duplicate record id " + r.id);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  if (header) {
    ojson h;
    h["canvas"] = {header->canvas.width, header->canvas.height};
    h["seed"] = header->seed;
    h["tool_version"] = header->tool_version;
    if (!header->extra.empty()) h["extra"] = header->extra;
    out << ojson{{kHeaderKey, h}}.dump() << '\n';
  }
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

Manifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open manifest " + path.string());
  Manifest m;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto where = path.string() + ":" + std::to_string(line_no) + ": ";
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw FormatError(where + e.what());
    }
    if (j.is_object() && j.contains(kHeaderKey)) {
      if (line_no != 1) throw FormatError(where + "header must be the first line");
      const auto& h = j[kHeaderKey];
      try {
        ManifestHeader header;
        header.canvas = {h.at("canvas").at(0).get<int>(), h.at("canvas").at(1).get<int>()};
        header.seed = h.at("seed").get<std::uint64_t>();
        header.tool_version = h.at("tool_version").get<std::string>();
        if (h.contains("extra")) header.extra = h["extra"];
        m.header = header;
      } catch (const json::exception& e) {
        throw FormatError(where + e.what());
      }
      continue;
    }
    SampleRecord r;
    try {
      r = record_from_json(j);
    } catch (const FormatError& e) {
      throw FormatError(where + e.what());
    }
    if (!ids.insert(r.id).second) throw FormatError(where + "duplicate record id " + r.id);
    m.records.push_back(std::move(r));
  }
  return m;
}

}  // namespace v2r
