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

#include "v2r/diagnostics/decode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "v2r/error.hpp"

namespace v2r {
namespace {

std::vector<double> logits(std::span<const float> h, const Matrix& e) {
  if (h.size() != e.cols) {
    throw InvalidArgument("decode: feature length " + std::to_string(h.size()) +
                          " does not match embedding width " + std::to_string(e.cols));
  }
  std::vector<double> z(e.rows, 0.0);
  for (std::size_t r = 0; r < e.rows; ++r) {
    const auto row = e.row(r);
    double s = 0.0;
    for (std::size_t c = 0; c < e.cols; ++c) s += static_cast<double>(h[c]) * row[c];
    if (!std::isfinite(s)) throw InvalidArgument("decode: non-finite logit at row " + std::to_string(r));
    z[r] = s;
  }
  return z;
}

std::vector<double> softmax(const std::vector<double>& z) {
  const double mx = *std::max_element(z.begin(), z.end());
  std::vector<double> p(z.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) sum += p[i] = std::exp(z[i] - mx);
  for (double& v : p) v /= sum;
  return p;
}

}  // namespace

std::vector<double> vocab_distribution(std::span<const float> h, const Matrix& embeddings) {
  if (embeddings.rows == 0) throw InvalidArgument("decode: empty embedding matrix");
  return softmax(logits(h, embeddings));
}

DecodeResult decode_feature(std::span<const float> h, const Matrix& embeddings,
                            const std::vector<std::string>& vocab, std::size_t k) {
  if (vocab.size() != embeddings.rows) {
    throw InvalidArgument("decode: vocabulary has " + std::to_string(vocab.size()) + " entries but E has " +
                          std::to_string(embeddings.rows) + " rows");
  }
  if (k < 1 || k > vocab.size()) throw InvalidArgument("decode: k must lie in [1, |vocab|]");
  const auto z = logits(h, embeddings);
  // Ranking on logits equals ranking on probabilities.
  std::vector<std::size_t> idx(z.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                    [&](std::size_t a, std::size_t b) { return z[a] > z[b] || (z[a] == z[b] && a < b); });
  const auto p = softmax(z);
  DecodeResult out;
  for (std::size_t i = 0; i < k; ++i) out.push_back({idx[i], vocab[idx[i]], p[idx[i]]});
  return out;
}

}  // namespace v2r
