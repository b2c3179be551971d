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

#include <chrono>
#include <cstring>
#include <fstream>
#include <random>

#include "../common/oracles.hpp"
#include "v2r/diagnostics/alignment.hpp"
#include "v2r/diagnostics/decode.hpp"
#include "v2r/diagnostics/matrix.hpp"
#include "v2r/diagnostics/probe.hpp"
#include "v2r/error.hpp"

namespace v2r {
namespace {

const std::filesystem::path kProbeDir = std::filesystem::path(V2R_FIXTURE_DIR) / "probe";

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<float> g;
  Matrix m(r, c);
  for (auto& v : m.data) v = g(rng);
  return m;
}

oracle::Rows rows_of(const Matrix& m) {
  oracle::Rows out(m.rows, std::vector<double>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out[r][c] = m.at(r, c);
  return out;
}

std::vector<std::uint8_t> bytes(const std::string& s) { return {s.begin(), s.end()}; }

TEST(Vmat, ByteLayout) {
  Matrix m(2, 1);
  m.at(0, 0) = 1.0f;
  m.at(1, 0) = -2.5f;
  const auto enc = encode_vmat(m);
  // 1.0f = 0x3f800000, -2.5f = 0xc0200000, little endian.
  std::vector<std::uint8_t> want = bytes("VMAT1\n2 1\n");
  for (std::uint8_t b : {0x00, 0x00, 0x80, 0x3f, 0x00, 0x00, 0x20, 0xc0}) want.push_back(b);
  EXPECT_EQ(enc, want);
  EXPECT_EQ(decode_vmat(enc), m);
}

TEST(Vmat, RoundTripFile) {
  std::mt19937_64 rng(1);
  const Matrix m = random_matrix(rng, 7, 3);
  const auto path = std::filesystem::temp_directory_path() / "v2r_test_roundtrip.vmat";
  write_vmat(m, path);
  EXPECT_EQ(read_vmat(path), m);
  std::filesystem::remove(path);
}

TEST(Vmat, RejectsMalformed) {
  EXPECT_THROW(decode_vmat(bytes("VMAT2\n1 1\n0000")), FormatError);
  EXPECT_THROW(decode_vmat(bytes("VMAT1\n1 x\n0000")), FormatError);
  EXPECT_THROW(decode_vmat(bytes("VMAT1\n2 1\n0000")), FormatError);
  EXPECT_THROW(decode_vmat(bytes("VMAT1\n1 1\n00000")), FormatError);
  auto nan = bytes("VMAT1\n1 1\n");
  for (std::uint8_t b : {0x00, 0x00, 0xc0, 0x7f}) nan.push_back(b);
  EXPECT_THROW(decode_vmat(nan), FormatError);
  EXPECT_THROW(read_vmat("/nonexistent/x.vmat"), IoError);
  Matrix bad(1, 1);
  bad.data[0] = INFINITY;
  EXPECT_THROW(write_vmat(bad, std::filesystem::temp_directory_path() / "v2r_bad.vmat"), InvalidArgument);
}

TEST(Vocab, LinesAndLineEndings) {
  const auto path = std::filesystem::temp_directory_path() / "v2r_vocab.txt";
  std::ofstream(path, std::ios::binary) << "a\r\nb\n\nc\n";
  EXPECT_EQ(read_vocab(path), (std::vector<std::string>{"a", "b", "", "c"}));
  std::filesystem::remove(path);
}

TEST(Decode, MatchesOracle) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t v = 5 + rng() % 30, d = 1 + rng() % 8, k = 1 + rng() % 5;
    const Matrix e = random_matrix(rng, v, d);
    const Matrix h = random_matrix(rng, 1, d);
    std::vector<std::string> vocab;
    for (std::size_t i = 0; i < v; ++i) vocab.push_back("t" + std::to_string(i));
    const auto got = decode_feature(h.row(0), e, vocab, k);
    const auto want = oracle::decode(rows_of(h)[0], rows_of(e), k);
    ASSERT_EQ(got.size(), k);
    for (std::size_t i = 0; i < k; ++i) {
      ASSERT_EQ(got[i].index, want[i].first);
      ASSERT_EQ(got[i].token, vocab[want[i].first]);
      ASSERT_NEAR(got[i].probability, want[i].second, 1e-9);
    }
  }
}

TEST(Decode, TiesGoToLowerIndex) {
  Matrix e(3, 1, 1.0f);
  const std::vector<float> h{2.0f};
  const auto r = decode_feature(h, e, {"a", "b", "c"}, 3);
  EXPECT_EQ(r[0].index, 0u);
  EXPECT_EQ(r[1].index, 1u);
  EXPECT_EQ(r[2].index, 2u);
  EXPECT_NEAR(r[0].probability, 1.0 / 3.0, 1e-15);
}

TEST(Decode, RejectsBadShapes) {
  Matrix e(3, 2);
  const std::vector<float> h{1.0f, 2.0f};
  EXPECT_THROW(decode_feature(std::vector<float>{1.0f}, e, {"a", "b", "c"}), InvalidArgument);
  EXPECT_THROW(decode_feature(h, e, {"a", "b"}), InvalidArgument);
  EXPECT_THROW(decode_feature(h, e, {"a", "b", "c"}, 0), InvalidArgument);
  EXPECT_THROW(decode_feature(h, e, {"a", "b", "c"}, 4), InvalidArgument);
}

TEST(Decode, LargeLogitsStayFinite) {
  Matrix e(2, 1);
  e.at(0, 0) = 1e30f;
  e.at(1, 0) = 1e30f;
  const auto p = vocab_distribution(std::vector<float>{1e8f}, e);
  EXPECT_NEAR(p[0] + p[1], 1.0, 1e-12);
}

TEST(Probe, SeparableFixture) {
  const Matrix x = read_vmat(kProbeDir / "train.vmat");
  const auto y = read_lines_file(kProbeDir / "train_labels.txt");
  ASSERT_EQ(x.rows, 500u);
  const auto start = std::chrono::steady_clock::now();
  const Probe p = train_linear_probe(x, y);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_GE(probe_accuracy(p, x, y), 0.99);
  EXPECT_GE(probe_accuracy(p, read_vmat(kProbeDir / "test.vmat"), read_lines_file(kProbeDir / "test_labels.txt")),
            0.99);
  EXPECT_LT(secs, 10.0);
  EXPECT_EQ(p.classes.size(), 5u);
}

TEST(Probe, GradientMatchesFiniteDifference) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 5 + rng() % 20, d = 1 + rng() % 5, k = 2 + rng() % 4;
    const Matrix x = random_matrix(rng, n, d);
    std::vector<int> y(n);
    for (auto& v : y) v = static_cast<int>(rng() % k);
    std::normal_distribution<double> g(0, 0.5);
    std::vector<double> w(k * d), b(k);
    for (auto& v : w) v = g(rng);
    for (auto& v : b) v = g(rng);
    const double l2 = 0.01;
    const auto lg = probe_loss_gradient(x, y, k, w, b, l2);
    const double eps = 1e-6;
    auto check = [&](std::vector<double>& param, const std::vector<double>& grad) {
      for (std::size_t i = 0; i < param.size(); ++i) {
        const double keep = param[i];
        param[i] = keep + eps;
        const double up = probe_loss_gradient(x, y, k, w, b, l2).loss;
        param[i] = keep - eps;
        const double down = probe_loss_gradient(x, y, k, w, b, l2).loss;
        param[i] = keep;
        const double fd = (up - down) / (2 * eps);
        const double scale = std::max({std::abs(fd), std::abs(grad[i]), 1e-3});
        ASSERT_LT(std::abs(fd - grad[i]) / scale, 1e-4) << "component " << i;
      }
    };
    check(w, lg.grad_w);
    check(b, lg.grad_b);
  }
}

TEST(Probe, ShuffledLabelsAreChance) {
  const Matrix x = read_vmat(kProbeDir / "train.vmat");
  auto y = read_lines_file(kProbeDir / "train_labels.txt");
  const Matrix tx = read_vmat(kProbeDir / "test.vmat");
  auto ty = read_lines_file(kProbeDir / "test_labels.txt");
  std::mt19937_64 rng(4);
  std::shuffle(y.begin(), y.end(), rng);
  std::shuffle(ty.begin(), ty.end(), rng);
  const Probe p = train_linear_probe(x, y);
  EXPECT_NEAR(probe_accuracy(p, tx, ty), 0.2, 0.05);
}

TEST(Probe, ThreadCountDoesNotChangeResult) {
  const Matrix x = read_vmat(kProbeDir / "train.vmat");
  const auto y = read_lines_file(kProbeDir / "train_labels.txt");
  ProbeHyper h;
  h.max_iterations = 200;
  const Probe a = train_linear_probe(x, y, h);
  h.threads = 4;
  const Probe b = train_linear_probe(x, y, h);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.bias, b.bias);
}

TEST(Probe, JsonRoundTripAndErrors) {
  Matrix x(4, 1);
  x.data = {-2, -1, 1, 2};
  const Probe p = train_linear_probe(x, {"neg", "neg", "pos", "pos"});
  const Probe q = probe_from_json(nlohmann::json::parse(probe_to_json(p).dump()));
  EXPECT_EQ(probe_predict(q, x), probe_predict(p, x));
  EXPECT_EQ(probe_predict(p, x), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_THROW(train_linear_probe(x, {"a", "a", "a", "a"}), InvalidArgument);
  EXPECT_THROW(train_linear_probe(x, {"a", "b"}), InvalidArgument);
  EXPECT_EQ(probe_accuracy(p, x, {"neg", "neg", "pos", "other"}), 0.75);
}

TEST(Alignment, MatchesOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 8, d = 1 + rng() % 6;
    const Matrix h = random_matrix(rng, n, d), c = random_matrix(rng, n, d);
    const AlignmentGap g = alignment_gap(h, c);
    const auto o = oracle::alignment_gap(rows_of(h), rows_of(c));
    ASSERT_NEAR(g.matched, o.matched, 1e-9);
    ASSERT_NEAR(g.mismatched, o.mismatched, 1e-9);
    ASSERT_NEAR(g.gap, o.gap, 1e-9);
  }
}

TEST(Alignment, OrthonormalIdentity) {
  Matrix h(4, 4);
  for (std::size_t i = 0; i < 4; ++i) h.at(i, i) = 1.0f;
  const AlignmentGap g = alignment_gap(h, h);
  EXPECT_NEAR(g.gap, 1.0, 1e-12);
  EXPECT_THROW(alignment_gap(h, Matrix(3, 4, 1.0f)), InvalidArgument);
  EXPECT_THROW(alignment_gap(Matrix(2, 2), Matrix(2, 2)), InvalidArgument);
}

TEST(Clusters, MatchesOracle) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng() % 10, d = 1 + rng() % 4;
    const Matrix x = random_matrix(rng, n, d);
    std::vector<std::string> labels(n);
    for (auto& l : labels) l = std::string(1, static_cast<char>('a' + rng() % 3));
    labels[0] = "a";
    labels[1] = "b";
    const ClusterStats s = cluster_stats(x, labels);
    const auto o = oracle::cluster_stats(rows_of(x), labels);
    ASSERT_NEAR(s.intra, o.intra, 1e-9);
    ASSERT_NEAR(s.inter, o.inter, 1e-9);
    ASSERT_NEAR(s.ratio, o.ratio, 1e-9);
  }
  EXPECT_THROW(cluster_stats(Matrix(2, 1), {"a", "a"}), InvalidArgument);
}

TEST(Projection, LineDataHasOneComponent) {
  Matrix x(5, 3);
  for (std::size_t r = 0; r < 5; ++r) {
    const float t = static_cast<float>(r) - 2.0f;
    x.at(r, 0) = t;
    x.at(r, 1) = -2 * t;
    x.at(r, 2) = 5.0f;
  }
  const Matrix p = principal_projection(x);
  for (std::size_t r = 0; r < 5; ++r) {
    EXPECT_NEAR(std::abs(p.at(r, 0)), std::abs((static_cast<double>(r) - 2.0) * std::sqrt(5.0)), 1e-4);
    EXPECT_NEAR(p.at(r, 1), 0.0, 1e-4);
  }
  // Largest loading (on column 1) is positive, so the row with t = -2 lands at +.
  EXPECT_GT(p.at(0, 0), 0.0f);
}

}  // namespace
}  // namespace v2r
