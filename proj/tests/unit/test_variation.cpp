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

#include <cmath>

#include "../common/oracles.hpp"
#include "v2r/core/variation_space.hpp"
#include "v2r/error.hpp"
#include "v2r/image/draw.hpp"
#include "v2r/image/png.hpp"
#include "v2r/variation/assets.hpp"
#include "v2r/variation/compose.hpp"
#include "v2r/variation/direction.hpp"
#include "v2r/variation/enumerate.hpp"

namespace v2r {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kClockwise{"up",   "top-right",   "right", "bottom-right",
                                          "down", "bottom-left", "left",  "top-left"};

TEST(Direction, MatchesOracleOverAllLabelsAndRotations) {
  for (int l = 0; l < 8; ++l) {
    for (int r = 0; r < 360; r += 45) {
      EXPECT_EQ(remap_direction_label(kClockwise[l], r), kClockwise[oracle::direction_remap_index(l, r)]);
    }
  }
}

TEST(Direction, GroupLaw) {
  for (const auto& l : kClockwise) {
    EXPECT_EQ(remap_direction_label(l, 0), l);
    for (int a = 0; a < 360; a += 45) {
      EXPECT_EQ(remap_direction_label(remap_direction_label(l, a), (360 - a) % 360), l);
      for (int b = 0; b < 360; b += 45) {
        EXPECT_EQ(remap_direction_label(remap_direction_label(l, a), b), remap_direction_label(l, (a + b) % 360));
      }
    }
  }
}

TEST(Direction, RejectsInvalidInput) {
  EXPECT_THROW(remap_direction_label("sideways", 0), InvalidArgument);
  EXPECT_THROW(remap_direction_label("up", 30), InvalidArgument);
  EXPECT_TRUE(is_direction_label("top-left"));
  EXPECT_FALSE(is_direction_label("Top-Left"));
}

TEST(Compose, ObjectSizeFollowsScale) {
  const Canvas canvas{672, 672};
  const BackgroundBank bank;
  for (const Asset& asset : {builtin_arrow(), builtin_object_assets()[0]}) {
    for (double s : {1.0 / 2, 1.0 / 3, 1.0 / 5, 1.0 / 10, 1.0 / 15, 1.0 / 20}) {
      const Variation v{{336, 336}, s, 0, "solid/ffffff"};
      const Composition c = apply_variation(asset, bank, v, canvas, Task::kObject);
      const auto box = box_differing_from(c.image, kWhite);
      ASSERT_TRUE(box);
      const int expected = static_cast<int>(std::lround(s * 672));
      EXPECT_NEAR(std::max(box->width(), box->height()), expected, 1) << asset.label() << " scale " << s;
      EXPECT_NEAR(std::max(c.object_box.width(), c.object_box.height()), expected, 1);
      EXPECT_NEAR(box->center_x(), 336, 1.0);
      EXPECT_NEAR(box->center_y(), 336, 1.0);
    }
  }
}

TEST(Compose, QuarterTurnsSwapExtent) {
  const BackgroundBank bank;
  const Variation v0{{336, 336}, 0.25, 0, "solid/000000"};
  Variation v90 = v0;
  v90.rotation = 90;
  const auto a = apply_variation(builtin_arrow(), bank, v0, {672, 672}, Task::kDirection);
  const auto b = apply_variation(builtin_arrow(), bank, v90, {672, 672}, Task::kDirection);
  EXPECT_EQ(a.object_box.width(), b.object_box.height());
  EXPECT_EQ(a.object_box.height(), b.object_box.width());
  EXPECT_EQ(std::get<Label>(a.ground_truth).value, "right");
  EXPECT_EQ(std::get<Label>(b.ground_truth).value, "down");
}

TEST(Compose, ArrowTipFollowsRotation) {
  // The end slice holding the tip has fewer object pixels than the tail end.
  const BackgroundBank bank;
  for (int r = 0; r < 360; r += 90) {
    const Variation v{{336, 336}, 0.3, static_cast<double>(r), "solid/ffffff"};
    const auto c = apply_variation(builtin_arrow(), bank, v, {672, 672}, Task::kDirection);
    const auto box = *box_differing_from(c.image, kWhite);
    auto mass = [&](int x0, int x1, int y0, int y1) {
      int n = 0;
      for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x) n += !(c.image.at(x, y) == kWhite);
      return n;
    };
    const int sw = box.width() / 10, sh = box.height() / 10;
    const int left = mass(box.x0, box.x0 + sw, box.y0, box.y1), right = mass(box.x1 - sw, box.x1, box.y0, box.y1);
    const int top = mass(box.x0, box.x1, box.y0, box.y0 + sh), bottom = mass(box.x0, box.x1, box.y1 - sh, box.y1);
    const std::string label = std::get<Label>(c.ground_truth).value;
    if (label == "right") EXPECT_LT(right, left);
    if (label == "left") EXPECT_LT(left, right);
    if (label == "down") EXPECT_LT(bottom, top);
    if (label == "up") EXPECT_LT(top, bottom);
  }
}

TEST(Compose, OutOfCanvasIsReported) {
  const BackgroundBank bank;
  const Variation v{{10, 10}, 0.5, 0, "solid/ffffff"};
  EXPECT_THROW(apply_variation(builtin_arrow(), bank, v, {672, 672}, Task::kDirection), OutOfBoundsError);
}

TEST(Backgrounds, SolidIdsAndErrors) {
  EXPECT_EQ(parse_solid_color("solid/ff8800"), (Rgba{255, 136, 0, 255}));
  EXPECT_EQ(parse_solid_color("000000"), kBlack);
  EXPECT_THROW(parse_solid_color("solid/xyz"), InvalidArgument);
  const BackgroundBank bank;
  EXPECT_THROW(bank.resolve("images/missing"), InvalidArgument);
  EXPECT_TRUE(bank.contains("solid/123456"));
}

TEST(Draw, QuarterRotationIsPermutation) {
  Image img(3, 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 3; ++x) img.at(x, y) = Rgba{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y), 0, 255};
  const Image r = rotate_bilinear(img, 90);
  ASSERT_EQ(r.width(), 2);
  ASSERT_EQ(r.height(), 3);
  // Clockwise: the bottom-left source pixel moves to the top-left.
  EXPECT_EQ(r.at(0, 0), img.at(0, 1));
  EXPECT_EQ(r.at(1, 0), img.at(0, 0));
  EXPECT_EQ(r.at(1, 2), img.at(2, 0));
}

TEST(Png, RoundTrip) {
  Image img(5, 4, Rgba{1, 2, 3, 255});
  img.at(2, 3) = Rgba{200, 100, 50, 128};
  EXPECT_EQ(decode_png(encode_png(img)), img);
  EXPECT_EQ(encode_png(img), encode_png(img));
}

TEST(Enumerate, CoversProductAndIsDeterministic) {
  RunConfig cfg;
  cfg.grid = 3;
  cfg.scales = {0.5, 0.2};
  cfg.rotations = {0, 45};
  cfg.contexts = {"solid/ffffff"};
  cfg.canvas = {96, 96};
  const VariationSpace space = build_variation_space(cfg, cfg.canvas);
  const auto dir = fs::temp_directory_path() / "v2r_enumerate";
  fs::remove_all(dir);
  EnumerationOptions o;
  o.task = Task::kDirection;
  o.out_dir = dir;
  o.master_seed = 7;
  const auto a = enumerate_variants({builtin_arrow()}, BackgroundBank{}, space, o);
  EXPECT_EQ(a.records.size() + a.skipped.size(), space.size());
  EXPECT_FALSE(a.skipped.empty());  // scale 0.5 off-centre leaves the canvas
  for (const auto& r : a.records) {
    EXPECT_TRUE(fs::exists(dir / *r.image_path));
    EXPECT_EQ(std::get<Label>(r.ground_truth).value, remap_direction_label("right", r.variation->rotation));
  }
  o.threads = 3;
  const auto b = enumerate_variants({builtin_arrow()}, BackgroundBank{}, space, o);
  EXPECT_EQ(a.records, b.records);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace v2r
