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

#include <gtest/gtest.h>

#include "v2r/error.hpp"
#include "v2r/report/score.hpp"

namespace v2r {
namespace {

using ojson = nlohmann::ordered_json;

// Direction records on a grid x grid anchor set, two rotations each.
Manifest direction_manifest(int grid) {
  Manifest m;
  for (int cell = 0; cell < grid * grid; ++cell) {
    for (double rot : {0.0, 90.0}) {
      SampleRecord r;
      r.id = "d" + std::to_string(cell) + "-" + std::to_string(static_cast<int>(rot));
      r.task = Task::kDirection;
      r.image_path = "images/" + r.id + ".png";
      r.variation = Variation{{cell % grid * 10.0 + 5, cell / grid * 10.0 + 5}, 0.2, rot, "solid/ffffff"};
      r.ground_truth = Label{rot == 0 ? "right" : "down"};
      r.prompt_id = "direction";
      r.params["asset_index"] = 0;
      r.params["grid"] = grid;
      r.params["cell"] = {cell % grid, cell / grid};
      m.records.push_back(r);
    }
  }
  return m;
}

ModelOutput answer(const SampleRecord& r, const std::string& raw) {
  ModelOutput o;
  o.sample_id = r.id;
  o.model = "scripted";
  o.raw = raw;
  o.parsed = parse_answer(r.task, raw);
  o.attempts = 1;
  return o;
}

TEST(Score, AllCorrectGivesOneEverywhere) {
  const Manifest m = direction_manifest(3);
  std::vector<ModelOutput> outs;
  for (const auto& r : m.records) outs.push_back(answer(r, std::get<Label>(r.ground_truth).value));
  const ReportBundle b = score_outputs(m, outs);
  const ojson& t = b.report["tasks"]["direction"];
  EXPECT_EQ(t["accuracy"], 1.0);
  EXPECT_EQ(t["robustness"]["C_m"], 1.0);
  for (const char* d : {"position", "scale", "rotation", "context"}) EXPECT_EQ(t["dimensions"][d]["C_m"], 1.0) << d;
  EXPECT_EQ(t["region_bias"]["middle"], 1.0);
  EXPECT_EQ(t["region_bias"]["surrounding"], 1.0);
  EXPECT_EQ(b.report["meta"]["model"], "scripted");
}

TEST(Score, TwoAnchorSplitGivesHalfConsistency) {
  Manifest m;
  for (int cell = 0; cell < 2; ++cell) {
    for (int k = 0; k < 4; ++k) {
      SampleRecord r;
      r.id = "a" + std::to_string(cell) + std::to_string(k);
      r.task = Task::kDirection;
      r.variation = Variation{{cell * 100.0 + 50, 50}, 0.2, 0, k % 2 ? "solid/000000" : "solid/ffffff"};
      r.ground_truth = Label{"up"};
      r.prompt_id = "direction";
      r.params["asset_index"] = k / 2;
      m.records.push_back(r);
    }
  }
  std::vector<ModelOutput> outs;
  for (const auto& r : m.records) outs.push_back(answer(r, r.variation->position.x < 100 ? "up" : "left"));
  const ReportBundle b = score_outputs(m, outs);
  const ojson& pos = b.report["tasks"]["direction"]["dimensions"]["position"];
  ASSERT_EQ(pos["slices"].size(), 2u);
  EXPECT_EQ(pos["slices"][0]["accuracy"], 1.0);
  EXPECT_EQ(pos["slices"][1]["accuracy"], 0.0);
  EXPECT_EQ(pos["C_m"], 0.5);
  EXPECT_EQ(b.report["tasks"]["direction"]["dimensions"]["context"]["C_m"], 1.0);
  EXPECT_EQ(b.report["tasks"]["direction"]["accuracy"], 0.5);
}

TEST(Score, MissingOutputsCountAsIncorrect) {
  const Manifest m = direction_manifest(3);
  std::vector<ModelOutput> outs;
  for (std::size_t i = 0; i + 2 < m.records.size(); ++i) {
    outs.push_back(answer(m.records[i], std::get<Label>(m.records[i].ground_truth).value));
  }
  const ReportBundle b = score_outputs(m, outs);
  const ojson& t = b.report["tasks"]["direction"];
  EXPECT_EQ(t["missing"], 2);
  EXPECT_EQ(t["correct"], 16);
  EXPECT_NEAR(t["accuracy"].get<double>(), 16.0 / 18.0, 1e-15);
}

TEST(Score, UnknownIdIsRejected) {
  const Manifest m = direction_manifest(3);
  ModelOutput o;
  o.sample_id = "nope";
  EXPECT_THROW(score_outputs(m, {o}), FormatError);
}

TEST(Score, RerunIsByteIdentical) {
  const Manifest m = direction_manifest(3);
  std::vector<ModelOutput> outs;
  for (std::size_t i = 0; i < m.records.size(); ++i) outs.push_back(answer(m.records[i], i % 3 ? "down" : "right"));
  const ReportBundle a = score_outputs(m, outs);
  const ReportBundle b = score_outputs(m, outs);
  EXPECT_EQ(a.report.dump(2), b.report.dump(2));
  EXPECT_EQ(a.table_csv, b.table_csv);
  EXPECT_EQ(a.heatmap_csv, b.heatmap_csv);
}

TEST(Score, PathBlock) {
  Manifest m;
  const std::vector<std::vector<GridPoint>> gts{{{1, 1}, {2, 2}, {3, 3}}, {{0, 0}, {1, 0}}};
  for (std::size_t i = 0; i < gts.size(); ++i) {
    SampleRecord r;
    r.id = "p" + std::to_string(i);
    r.task = Task::kPath;
    r.ground_truth = CoordinatePath{gts[i]};
    r.prompt_id = "path";
    r.params["n"] = gts[i].size();
    m.records.push_back(r);
  }
  std::vector<ModelOutput> outs{answer(m.records[0], "[(1, 1), (3, 3), (2, 2)]"),
                                answer(m.records[1], "[(0, 0), (1, 0)]")};
  const ReportBundle b = score_outputs(m, outs);
  const ojson& p = b.report["tasks"]["path"]["path"];
  EXPECT_NEAR(p["EMA"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(p["PM_IA"].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(p["PM_SA"].get<double>(), (1.0 / 3.0 + 1.0) / 2, 1e-15);
  EXPECT_NEAR(p["PA"].get<double>(), 3.0 / 5.0, 1e-15);
  EXPECT_EQ(p["positional_accuracy"], ojson::parse("[1.0, 0.5, 0.0]"));
  EXPECT_NE(b.positional_csv.find("path,2,1,0\n"), std::string::npos) << b.positional_csv;
}

}  // namespace
}  // namespace v2r
