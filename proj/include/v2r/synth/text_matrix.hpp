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

#include <cstdint>
#include <string>
#include <vector>

#include "v2r/core/random.hpp"
#include "v2r/core/types.hpp"

namespace v2r {

enum class MatrixBackground { kAsterisks, kRandomWords };

std::string_view to_string(MatrixBackground mode);
MatrixBackground parse_matrix_background(std::string_view name);

struct TextMatrixSpec {
  int size = 8;
  std::string word;
  MatrixBackground background = MatrixBackground::kAsterisks;
  int row = 0;  // zero-based
  int col = 0;  // zero-based column of the first letter

  friend bool operator==(const TextMatrixSpec&, const TextMatrixSpec&) = default;
};

const std::vector<int>& text_matrix_sizes();
const std::vector<std::string>& text_matrix_words();

void validate(const TextMatrixSpec& spec);

// Uniform placement over feasible (row, col).
TextMatrixSpec sample_text_matrix_spec(int size, const std::string& word,
                                       MatrixBackground background, Rng& rng);

// The three text tasks asked about one matrix.
enum class TextQuestion { kWord, kPosition, kCount };
std::string_view prompt_id(TextQuestion q);

struct GeneratedText {
  std::string text;  // rows joined by '\n', cells by ' ', trailing '\n'
  std::vector<std::vector<char>> cells;
  std::vector<SampleRecord> records;  // one per TextQuestion
};

// Records get ids "<id>-word", "<id>-position", "<id>-count" and carry the
// text file path "texts/<id>.txt" in params.text_path.
GeneratedText gen_text_matrix(const TextMatrixSpec& spec, std::uint64_t seed, const std::string& id);

// Horizontal occurrences of `word` in the grid.
int count_occurrences(const std::vector<std::vector<char>>& cells, const std::string& word);

}  // namespace v2r
