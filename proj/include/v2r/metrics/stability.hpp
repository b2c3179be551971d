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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "v2r/harness/endpoint.hpp"

namespace v2r {

// C_m = 1 - population standard deviation of per-variation metric values in
// [0, 1]. Throws InvalidArgument for empty input or values outside [0, 1].
double consistency(const std::vector<double>& values);

// Lowercased tokens split on whitespace and ASCII punctuation. Bytes >= 0x80
// stay inside tokens.
std::vector<std::string> tokenize(std::string_view text);

// Sorted, duplicate-free token set.
std::vector<std::string> token_set(std::string_view text);

// |a n b| / |a u b| on sorted sets; two empty sets give 1.
double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

// S_t: mean Jaccard similarity over all ordered pairs including self-pairs.
double token_stability(const std::vector<std::string>& outputs);
double token_stability_sets(const std::vector<std::vector<std::string>>& sets);

class Embedder {
 public:
  virtual ~Embedder() = default;
  // Throws on failure; vectors of one embedder share a dimension.
  virtual std::vector<double> embed(std::string_view text) const = 0;
};

// Deterministic offline embedder: token counts hashed into `dim` buckets.
// Text without tokens embeds as a reserved token, so vectors are never zero.
class HashedBowEmbedder : public Embedder {
 public:
  explicit HashedBowEmbedder(std::size_t dim = 256);
  std::vector<double> embed(std::string_view text) const override;
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
};

// Embeddings from an OpenAI-style /embeddings endpoint.
class EndpointEmbedder : public Embedder {
 public:
  EndpointEmbedder(EndpointConfig config, std::optional<std::string> token);
  std::vector<double> embed(std::string_view text) const override;

 private:
  std::string model_;
  std::unique_ptr<HttpChatClient> client_;
};

double cosine(const std::vector<double>& a, const std::vector<double>& b);

// S_s from precomputed embeddings: mean cosine over all ordered pairs
// including self-pairs, computed as |sum of unit vectors|^2 / N^2. Throws
// InvalidArgument for empty input, mixed dimensions or zero vectors.
double semantic_stability_vectors(const std::vector<std::vector<double>>& embeddings);

// S_s over raw outputs. Embedder failures are rethrown as Error naming the
// failing output (by `ids[i]` when given, else by index).
double semantic_stability(const std::vector<std::string>& outputs, const Embedder& embedder,
                          const std::vector<std::string>* ids = nullptr);

}  // namespace v2r
