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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace v2r {

// Row-major float32 matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, float fill = 0.0f) : rows(r), cols(c), data(r * c, fill) {}

  float& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  float at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<const float> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

// VMAT: "VMAT1\n", "<rows> <cols>\n", then rows*cols little-endian IEEE-754
// float32 values, row-major.
std::vector<std::uint8_t> encode_vmat(const Matrix& m);
// Throws FormatError for a bad magic, malformed header, truncated or
// oversized payload, or non-finite values.
Matrix decode_vmat(std::span<const std::uint8_t> bytes);

// Throws InvalidArgument for non-finite values or inconsistent sizes and
// IoError when the file cannot be written.
void write_vmat(const Matrix& m, const std::filesystem::path& path);
Matrix read_vmat(const std::filesystem::path& path);

// UTF-8 text, one entry per line; line i corresponds to row i. A trailing
// newline does not add an entry; '\r' line endings are stripped.
std::vector<std::string> read_lines_file(const std::filesystem::path& path);
std::vector<std::string> read_vocab(const std::filesystem::path& path);

}  // namespace v2r
