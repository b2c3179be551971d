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
#include <string>

#include <json.hpp>

#include "v2r/core/manifest.hpp"
#include "v2r/harness/eval.hpp"
#include "v2r/metrics/stability.hpp"

namespace v2r {

struct ScoreOptions {
  Weights weights;
  const Embedder* embedder = nullptr;  // hashed bag-of-words when null
  std::string embedder_name = "hashed-bow-256";
  ChatClient* judge = nullptr;         // no judge component when null
  std::string judge_rubric;            // builtin rubric when empty
};

// report.json plus plot-ready CSV tables.
struct ReportBundle {
  nlohmann::ordered_json report;
  std::string table_csv;         // model,task,dimension,value,n,accuracy
  std::string heatmap_csv;       // task,col,row,n,accuracy
  std::string scale_curve_csv;   // task,scale,n,accuracy
  std::string positional_csv;    // task,index,n,accuracy
  std::string region_bias_csv;   // task,region,cells,accuracy
};

// Scores outputs against the manifest. Records without an output count as
// incorrect and are reported as missing; failed requests count as incorrect
// and are reported separately. Throws FormatError when an output id is not in
// the manifest.
ReportBundle score_outputs(const Manifest& manifest, const std::vector<ModelOutput>& outputs,
                           const ScoreOptions& options = {});

// Writes report.json and the CSV files into `dir`.
void write_report_bundle(const ReportBundle& bundle, const std::filesystem::path& dir);

}  // namespace v2r
