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

#include <fstream>
#include <set>

#include "v2r/core/config.hpp"
#include "v2r/core/csv.hpp"
#include "v2r/core/hash.hpp"
#include "v2r/core/manifest.hpp"
#include "v2r/core/random.hpp"
#include "v2r/core/variation_space.hpp"
#include "v2r/error.hpp"

namespace v2r {
namespace {

namespace fs = std::filesystem;

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("v2r_core_" + name); }

TEST(Hash, KnownVectors) {
  EXPECT_EQ(sha256_hex(std::string_view("abc")),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(std::string_view("")),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  const std::string man = "Man";
  EXPECT_EQ(base64_encode({reinterpret_cast<const std::uint8_t*>(man.data()), man.size()}), "TWFu");
  const std::string ma = "Ma";
  EXPECT_EQ(base64_encode({reinterpret_cast<const std::uint8_t*>(ma.data()), ma.size()}), "TWE=");
}

TEST(Random, DerivedSeedsAreStableAndDistinct) {
  EXPECT_EQ(derive_seed(7, "path", 3), derive_seed(7, "path", 3));
  std::set<std::uint64_t> seen;
  for (const char* task : {"path", "coordinate", "ocr"})
    for (std::uint64_t i = 0; i < 100; ++i) seen.insert(derive_seed(7, task, i));
  EXPECT_EQ(seen.size(), 300u);
  EXPECT_NE(derive_seed(7, "path", 0), derive_seed(8, "path", 0));
}

TEST(Random, UniformIntBoundsAndRepeatability) {
  Rng a(42), b(42);
  for (int i = 0; i < 10000; ++i) {
    const auto v = a.uniform_int(-3, 5);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 5);
    ASSERT_EQ(v, b.uniform_int(-3, 5));
    const double u = a.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    b.uniform();
  }
}

TEST(Task, NamesRoundTrip) {
  for (Task t : all_tasks()) EXPECT_EQ(parse_task(to_string(t)), t);
  EXPECT_THROW(parse_task("bogus"), InvalidArgument);
}

SampleRecord sample_record(const std::string& id) {
  SampleRecord r;
  r.id = id;
  r.task = Task::kDirection;
  r.image_path = "images/" + id + ".png";
  r.variation = Variation{{112, 336}, 0.2, 45, "solid/ffffff"};
  r.ground_truth = Label{"bottom-right"};
  r.prompt_id = "direction";
  r.seed = 99;
  r.params["cell"] = {0, 1};
  return r;
}

TEST(Manifest, RoundTripWithHeader) {
  SampleRecord path_rec;
  path_rec.id = "p";
  path_rec.task = Task::kPath;
  path_rec.ground_truth = CoordinatePath{{{0, 0}, {1, -2}}};
  path_rec.prompt_id = "path";
  SampleRecord ocr_rec;
  ocr_rec.id = "o";
  ocr_rec.task = Task::kOcr;
  ocr_rec.ground_truth = OcrTruth{"abc", {{1, 'b', 'x'}}, "B2"};
  ocr_rec.prompt_id = "ocr";
  const std::vector<SampleRecord> records{sample_record("a"), path_rec, ocr_rec};
  ManifestHeader h;
  h.seed = 7;
  h.tool_version = "test";
  const auto path = temp_path("manifest.jsonl");
  write_manifest(records, path, h);
  const Manifest m = read_manifest(path);
  ASSERT_TRUE(m.header);
  EXPECT_EQ(*m.header, h);
  EXPECT_EQ(m.records, records);
  fs::remove(path);
}

TEST(Manifest, RejectsDuplicatesAndBadLines) {
  const auto path = temp_path("bad.jsonl");
  EXPECT_THROW(write_manifest({sample_record("a"), sample_record("a")}, path), InvalidArgument);
  write_manifest({sample_record("a")}, path);
  {
    std::ofstream out(path, std::ios::app);
    out << "{not json\n";
  }
  try {
    read_manifest(path);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_manifest(temp_path("missing.jsonl")), IoError);
  fs::remove(path);
}

TEST(Manifest, GroundTruthMustMatchTask) {
  SampleRecord r = sample_record("a");
  r.ground_truth = Coordinate{{1, 2}};
  EXPECT_FALSE(ground_truth_matches(r.task, r.ground_truth));
  EXPECT_THROW(write_manifest({r}, temp_path("mismatch.jsonl")), InvalidArgument);
}

TEST(Config, ParsesFractionsAndRejectsUnknownFields) {
  const RunConfig c = run_config_from_json(nlohmann::json::parse(
      R"({"seed": 3, "grid": 3, "scales": ["1/4", 0.5], "weights": {"judge": 0}})"));
  EXPECT_EQ(c.master_seed, 3u);
  EXPECT_EQ(c.scales, (std::vector<double>{0.25, 0.5}));
  EXPECT_EQ(c.weights.judge, 0.0);
  try {
    run_config_from_json(nlohmann::json::parse(R"({"weights": {"bogus": 1}})"));
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("config.weights.bogus"), std::string::npos);
  }
  EXPECT_THROW(run_config_from_json(nlohmann::json::parse(R"({"sed": 1})")), InvalidArgument);
  EXPECT_THROW(run_config_from_json(nlohmann::json::parse(R"({"weights": {"judge": -1}})")), InvalidArgument);
  EXPECT_THROW(validate_weights({0, 0, 0}), InvalidArgument);
}

TEST(Config, DefaultsMirrorPublishedSettings) {
  const RunConfig c;
  EXPECT_EQ(c.scales, (std::vector<double>{1.0 / 2, 1.0 / 3, 1.0 / 5, 1.0 / 10, 1.0 / 15, 1.0 / 20}));
  EXPECT_EQ(c.rotations.size(), 8u);
  EXPECT_EQ(c.grid, 5);
}

TEST(VariationSpace, ProductAndCellCentres) {
  RunConfig c;
  c.grid = 3;
  const VariationSpace s = build_variation_space(c, {300, 600});
  EXPECT_EQ(s.size(), 9u * 6u * 8u * 2u);
  EXPECT_EQ(s.positions[0], (Point{50, 100}));
  EXPECT_EQ(s.positions[5], (Point{250, 300}));  // row 1, col 2
  for (std::size_t i = 0; i < s.size(); i += 37) {
    const auto idx = s.decompose(i);
    const Variation v = s.at(i);
    EXPECT_EQ(v.position, s.positions[idx.position]);
    EXPECT_EQ(v.scale, s.scales[idx.scale]);
    EXPECT_EQ(v.rotation, s.rotations[idx.rotation]);
    EXPECT_EQ(v.context, s.contexts[idx.context]);
  }
  EXPECT_THROW(s.at(s.size()), InvalidArgument);
}

TEST(VariationSpace, RejectsInvalidConfigs) {
  RunConfig c;
  c.grid = 0;
  EXPECT_THROW(build_variation_space(c, {672, 672}), InvalidArgument);
  c = RunConfig{};
  c.scales = {0.5, 0.5};
  EXPECT_THROW(build_variation_space(c, {672, 672}), InvalidArgument);
  c = RunConfig{};
  c.rotations = {360};
  EXPECT_THROW(build_variation_space(c, {672, 672}), InvalidArgument);
  c = RunConfig{};
  c.scales = {1.5};
  EXPECT_THROW(build_variation_space(c, {672, 672}), InvalidArgument);
  EXPECT_THROW(build_variation_space(RunConfig{}, {16, 16}), InvalidArgument);
}

TEST(Csv, EscapingAndNumbers) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_row({"a", "b,c"}), "a,\"b,c\"\n");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(format_number(NAN), "");
}

}  // namespace
}  // namespace v2r
