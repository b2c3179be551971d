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

#include <span>
#include <string>
#include <vector>

#include "v2r/diagnostics/matrix.hpp"

namespace v2r {

struct TokenProb {
  std::size_t index = 0;
  std::string token;
  double probability = 0.0;
};

using DecodeResult = std::vector<TokenProb>;  // descending probability

// softmax(E h) over the whole vocabulary, max-subtracted. Throws
// InvalidArgument for dimension mismatches or non-finite logits.
std::vector<double> vocab_distribution(std::span<const float> h, const Matrix& embeddings);

// Top-k tokens of softmax(E h); ties go to the lower row index. Throws
// InvalidArgument when |h| != cols(E), |vocab| != rows(E) or k is outside
// [1, |vocab|].
DecodeResult decode_feature(std::span<const float> h, const Matrix& embeddings,
                            const std::vector<std::string>& vocab, std::size_t k = 5);

}  // namespace v2r
