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
#include <random>
#include <set>

#include "../common/oracles.hpp"
#include "v2r/error.hpp"
#include "v2r/metrics/aggregate.hpp"
#include "v2r/metrics/judge.hpp"
#include "v2r/metrics/ocr.hpp"
#include "v2r/metrics/path.hpp"
#include "v2r/metrics/region.hpp"
#include "v2r/metrics/stability.hpp"

namespace v2r {
namespace {

std::vector<std::string> random_texts(std::mt19937_64& rng, int n) {
  static const char* kWords[] = {"up", "down", "left", "right", "arrow", "the", "points", "a", "b", "c"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    std::string s;
    const int len = static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k) s += std::string(kWords[rng() % 10]) + (rng() % 2 ? " " : ", ");
    out.push_back(s);
  }
  return out;
}

std::set<std::string> oracle_set(const std::string& s) {
  std::set<std::string> out;
  std::string cur;
  for (char c : s + " ") {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!cur.empty()) {
      out.insert(cur);
      cur.clear();
    }
  }
  return out;
}

TEST(Anchors, HandComputed) {
  EXPECT_NEAR(consistency({1.0, 0.0}), 0.5, 1e-12);
  EXPECT_NEAR(token_stability({"x y", "y z"}), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(semantic_stability_vectors({{1, 0}, {0, 1}}), 0.5, 1e-12);
  const PathEval e = path_metrics(std::vector<GridPoint>{{1, 1}, {3, 3}, {2, 2}}, {{1, 1}, {2, 2}, {3, 3}});
  EXPECT_EQ(e.ema, 0.0);
  EXPECT_NEAR(e.pm_ia, 1.0, 1e-12);
  EXPECT_NEAR(e.pm_sa, 1.0 / 3.0, 1e-12);
}

TEST(Consistency, EqualInputsGiveOne) {
  for (double v : {0.0, 0.1, 1.0 / 3.0, 0.7, 1.0}) {
    EXPECT_EQ(consistency(std::vector<double>(7, v)), 1.0);
  }
  EXPECT_LT(consistency({0.5, 0.5, 0.75}), 1.0);
}

TEST(Consistency, RejectsOutOfRange) {
  EXPECT_THROW(consistency({}), InvalidArgument);
  EXPECT_THROW(consistency({1.5}), InvalidArgument);
  EXPECT_THROW(consistency({NAN}), InvalidArgument);
}

TEST(Consistency, MatchesOracle) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> v(1 + rng() % 12);
    for (auto& x : v) x = u(rng);
    EXPECT_NEAR(consistency(v), oracle::consistency(v), 1e-9);
  }
}

TEST(TokenStability, MatchesOracle) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 1000; ++t) {
    const auto texts = random_texts(rng, 1 + static_cast<int>(rng() % 6));
    std::vector<std::set<std::string>> sets;
    for (const auto& s : texts) sets.push_back(oracle_set(s));
    EXPECT_NEAR(token_stability(texts), oracle::token_stability(sets), 1e-9);
  }
}

TEST(TokenStability, DisjointSetsGiveInverseCount) {
  for (int n : {2, 3, 5}) {
    std::vector<std::string> texts;
    for (int i = 0; i < n; ++i) texts.push_back("w" + std::to_string(i) + " v" + std::to_string(i));
    EXPECT_NEAR(token_stability(texts), 1.0 / n, 1e-15);
  }
}

TEST(TokenStability, EmptyOutputsAgree) {
  EXPECT_EQ(jaccard({}, {}), 1.0);
  EXPECT_EQ(token_stability({"", "..."}), 1.0);
}

TEST(Tokenize, LowercasesAndSplits) {
  EXPECT_EQ(tokenize("Top-Right, (3,7)!"), (std::vector<std::string>{"top", "right", "3", "7"}));
}

TEST(SemanticStability, MatchesOracle) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 6, d = 1 + rng() % 5;
    std::vector<std::vector<double>> e(n, std::vector<double>(d));
    for (auto& row : e) {
      for (auto& x : row) x = g(rng);
      row[0] += 1e-3;  // keep rows away from zero
    }
    EXPECT_NEAR(semantic_stability_vectors(e), oracle::semantic_stability(e), 1e-9);
  }
}

TEST(SemanticStability, RejectsZeroAndMismatch) {
  EXPECT_THROW(semantic_stability_vectors({{0, 0}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(semantic_stability_vectors({{1, 0}, {1}}), InvalidArgument);
  EXPECT_THROW(semantic_stability_vectors({}), InvalidArgument);
}

TEST(SemanticStability, HashedEmbedderIsDeterministic) {
  const HashedBowEmbedder e(64);
  EXPECT_EQ(e.embed("up arrow"), e.embed("arrow up"));
  EXPECT_EQ(semantic_stability({"same", "same"}, e), 1.0);
  EXPECT_NO_THROW(semantic_stability({"", "!!"}, e));
}

TEST(PathMetrics, MatchesOracleAndOrdering) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10000; ++t) {
    std::vector<GridPoint> gt(1 + rng() % 6), pred(rng() % 8);
    for (auto& p : gt) p = {static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
    for (auto& p : pred) p = {static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
    if (rng() % 5 == 0) pred = gt;
    const PathEval e = path_metrics(pred, gt);
    std::vector<oracle::Pt> og, op;
    for (auto& p : gt) og.push_back({p[0], p[1]});
    for (auto& p : pred) op.push_back({p[0], p[1]});
    const auto o = oracle::path_metrics(&op, og);
    ASSERT_NEAR(e.ema, o.ema, 1e-12);
    ASSERT_NEAR(e.pm_ia, o.pm_ia, 1e-12);
    ASSERT_NEAR(e.pm_sa, o.pm_sa, 1e-12);
    ASSERT_LE(e.ema, e.pm_sa);
    ASSERT_LE(e.pm_sa, e.pm_ia);
  }
}

TEST(PathMetrics, MissingPredictionScoresZero) {
  const PathEval e = path_metrics(std::nullopt, {{0, 0}, {1, 1}});
  EXPECT_EQ(e.ema + e.pm_ia + e.pm_sa, 0.0);
  EXPECT_THROW(path_metrics(std::nullopt, {}), InvalidArgument);
}

TEST(PathMetrics, LongerPredictionIsNotExact) {
  const PathEval e = path_metrics(std::vector<GridPoint>{{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {1, 1}});
  EXPECT_EQ(e.ema, 0.0);
  EXPECT_EQ(e.pm_sa, 1.0);
}

TEST(PointAccuracy, MatchesOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<std::optional<IntTuple>> pred(n);
    std::vector<IntTuple> gt(n);
    std::vector<std::vector<int>> store(n);
    std::vector<const std::vector<int>*> opred(n, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
      gt[i] = {static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
      if (rng() % 4) {
        store[i] = {static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
        pred[i] = store[i];
        opred[i] = &store[i];
      }
    }
    ASSERT_NEAR(point_accuracy(pred, gt), oracle::point_accuracy(opred, gt), 1e-12);
  }
  EXPECT_THROW(point_accuracy({}, {}), InvalidArgument);
}

TEST(PositionalCurve, CountsPerIndex) {
  std::vector<PathSample> s{{std::vector<GridPoint>{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}, {2, 2}}},
                            {std::nullopt, {{5, 5}, {6, 6}}}};
  const auto c = positional_accuracy_curve(s);
  EXPECT_EQ(c.counts, (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_EQ(c.accuracy, (std::vector<double>{0.5, 0.5, 0.0}));
}

TEST(RegionBias, MiddleCells) {
  auto middles = [](int g) {
    int n = 0;
    for (int i = 0; i < g; ++i) n += is_middle_index(i, g);
    return n;
  };
  EXPECT_EQ(middles(3), 1);
  EXPECT_EQ(middles(5), 1);
  EXPECT_EQ(middles(6), 2);
  EXPECT_THROW(region_bias({1}, 1), InvalidArgument);
  EXPECT_THROW(region_bias({1, 2}, 3), InvalidArgument);
}

TEST(RegionBias, MatchesOracle) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 1000; ++t) {
    const int g = 3 + static_cast<int>(rng() % 8);
    std::vector<double> v(static_cast<std::size_t>(g * g));
    for (auto& x : v) x = rng() % 10 == 0 ? NAN : u(rng);
    const RegionBias r = region_bias(v, g);
    const auto o = oracle::region_bias(v, g);
    if (std::isnan(o.middle)) {
      ASSERT_TRUE(std::isnan(r.middle));
    } else {
      ASSERT_NEAR(r.middle, o.middle, 1e-9);
    }
    if (std::isnan(o.surrounding)) {
      ASSERT_TRUE(std::isnan(r.surrounding));
    } else {
      ASSERT_NEAR(r.surrounding, o.surrounding, 1e-9);
    }
  }
}

TEST(Aggregate, RenormalizesOverPresentComponents) {
  StabilityScores s;
  s.consistency = 0.8;
  s.semantic = 0.6;
  s.token = 0.4;
  EXPECT_NEAR(aggregate_robustness(s, {1, 1, 1}), (0.8 + 0.5) / 2, 1e-12);
  s.judge = 0.2;
  EXPECT_NEAR(aggregate_robustness(s, {1, 2, 1}), (0.8 + 2 * 0.5 + 0.2) / 4, 1e-12);
  EXPECT_NEAR(aggregate_robustness(s, {0, 0, 1}), 0.2, 1e-12);
  EXPECT_THROW(aggregate_robustness({}, {1, 1, 1}), InvalidArgument);
  StabilityScores only_judge;
  only_judge.judge = 0.5;
  EXPECT_THROW(aggregate_robustness(only_judge, {1, 1, 0}), InvalidArgument);
  s.token = 1.5;
  EXPECT_THROW(aggregate_robustness(s, {1, 1, 1}), InvalidArgument);
}

TEST(Aggregate, StabilityComponentIsMean) {
  StabilityScores s;
  EXPECT_FALSE(stability_component(s));
  s.token = 0.4;
  EXPECT_EQ(*stability_component(s), 0.4);
  s.semantic = 0.6;
  EXPECT_NEAR(*stability_component(s), 0.5, 1e-15);
}

TEST(Ocr, FidelityCounts) {
  OcrTruth t;
  t.source = "the quick brown fox";
  t.replacements = {{0, 't', 'x'}, {4, 'q', 'z'}};  // "xhe zuick brown fox"
  const OcrFidelity kept = ocr_fidelity("xhe zuick brown fox", t);
  EXPECT_EQ(kept.reported_as_written, 1.0);
  EXPECT_EQ(kept.inferred_correction, 0.0);
  const OcrFidelity fixed = ocr_fidelity("The quick brown fox.", t);
  EXPECT_EQ(fixed.inferred_correction, 1.0);
  const OcrFidelity half = ocr_fidelity("the zuick", t);
  EXPECT_EQ(half.reported_as_written, 0.5);
  EXPECT_EQ(half.inferred_correction, 0.5);
  const OcrFidelity none = ocr_fidelity("", t);
  EXPECT_EQ(none.reported_as_written + none.inferred_correction, 0.0);
}

TEST(Judge, VerdictParsing) {
  EXPECT_EQ(parse_judge_verdict("Score: 7/10"), 7);
  EXPECT_EQ(parse_judge_verdict("10"), 10);
  EXPECT_FALSE(parse_judge_verdict("42"));
  EXPECT_FALSE(parse_judge_verdict("no number"));
  const std::string p = build_judge_prompt("T={ground_truth}\n{outputs}", "up", {"a", "b"});
  EXPECT_EQ(p, "T=up\n1. a\n2. b");
}

}  // namespace
}  // namespace v2r
