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

#include "v2r/synth/text_matrix.hpp"

#include <algorithm>

#include "v2r/error.hpp"

namespace v2r {
namespace {

// Background vocabulary; none contains a target word.
const std::vector<std::string>& background_words() {
  static const std::vector<std::string> words{
      "tree",  "house", "river",  "book",   "chair",  "cloud",  "stone",  "lamp",
      "road",  "door",  "apple",  "bread",  "glass",  "paper",  "table",  "water",
      "light", "green", "music",  "night",  "plant",  "train",  "clock",  "bottle",
      "window", "garden", "pencil", "silver", "summer", "winter", "market", "letter"};
  return words;
}

constexpr int kMaxBackgroundAttempts = 1000;

}  // namespace

std::string_view to_string(MatrixBackground mode) {
  return mode == MatrixBackground::kAsterisks ? "asterisks" : "random-words";
}

MatrixBackground parse_matrix_background(std::string_view name) {
  if (name == "asterisks") return MatrixBackground::kAsterisks;
  if (name == "random-words") return MatrixBackground::kRandomWords;
  throw InvalidArgument("unknown matrix background '" + std::string(name) + "'");
}

const std::vector<int>& text_matrix_sizes() {
  static const std::vector<int> sizes{8, 16, 24, 32, 40, 64};
  return sizes;
}

const std::vector<std::string>& text_matrix_words() {
  static const std::vector<std::string> words{"dog",   "cat",   "bird",   "lion",
                                              "tiger", "zebra", "monkey", "panda"};
  return words;
}

std::string_view prompt_id(TextQuestion q) {
  switch (q) {
    case TextQuestion::kWord:
      return "text-word";
    case TextQuestion::kPosition:
      return "text-position";
    case TextQuestion::kCount:
      return "text-count";
  }
  return "";
}

void validate(const TextMatrixSpec& spec) {
  if (spec.size < 1) throw InvalidArgument("matrix size must be positive");
  if (spec.word.empty()) throw InvalidArgument("target word is empty");
  if (spec.row < 0 || spec.row >= spec.size || spec.col < 0 ||
      spec.col + static_cast<int>(spec.word.size()) > spec.size) {
    throw InvalidArgument("word '" + spec.word + "' does not fit at (" + std::to_string(spec.row) +
                          ", " + std::to_string(spec.col) + ")");
  }
}

TextMatrixSpec sample_text_matrix_spec(int size, const std::string& word,
                                       MatrixBackground background, Rng& rng) {
  TextMatrixSpec spec{size, word, background, 0, 0};
  if (static_cast<int>(word.size()) > size) {
    throw InvalidArgument("word '" + word + "' longer than the matrix");
  }
  spec.row = static_cast<int>(rng.uniform_int(0, size - 1));
  spec.col = static_cast<int>(rng.uniform_int(0, size - static_cast<int>(word.size())));
  validate(spec);
  return spec;
}

int count_occurrences(const std::vector<std::vector<char>>& cells, const std::string& word) {
  int count = 0;
  for (const auto& row : cells) {
    if (row.size() < word.size()) continue;
    for (std::size_t c = 0; c + word.size() <= row.size(); ++c) {
      if (std::equal(word.begin(), word.end(), row.begin() + static_cast<std::ptrdiff_t>(c))) ++count;
    }
  }
  return count;
}

GeneratedText gen_text_matrix(const TextMatrixSpec& spec, std::uint64_t seed, const std::string& id) {
  validate(spec);
  const auto n = static_cast<std::size_t>(spec.size);
  std::vector<std::vector<char>> cells;
  Rng rng(seed);
  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxBackgroundAttempts) {
      throw InvalidArgument("could not draw a background without extra '" + spec.word + "'");
    }
    cells.assign(n, std::vector<char>(n, '*'));
    if (spec.background == MatrixBackground::kRandomWords) {
      const auto& vocab = background_words();
      for (auto& row : cells) {
        std::string stream;
        while (stream.size() < n) {
          stream += vocab[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(vocab.size()) - 1))];
        }
        std::copy_n(stream.begin(), n, row.begin());
      }
    }
    for (std::size_t i = 0; i < spec.word.size(); ++i) {
      cells[static_cast<std::size_t>(spec.row)][static_cast<std::size_t>(spec.col) + i] = spec.word[i];
    }
    if (count_occurrences(cells, spec.word) == 1) break;
  }

  GeneratedText out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out.text += ' ';
      out.text += row[c];
    }
    out.text += '\n';
  }
  out.cells = cells;

  const std::string text_path = "texts/" + id + ".txt";
  for (TextQuestion q : {TextQuestion::kWord, TextQuestion::kPosition, TextQuestion::kCount}) {
    SampleRecord r;
    const std::string_view pid = prompt_id(q);
    r.id = id + "-" + std::string(pid.substr(5));
    r.task = Task::kTextMatrix;
    r.ground_truth = WordPlacement{spec.word, spec.row, spec.col, 1};
    r.prompt_id = std::string(pid);
    r.seed = seed;
    r.params["matrix_id"] = id;
    r.params["size"] = spec.size;
    r.params["background"] = std::string(to_string(spec.background));
    r.params["text_path"] = text_path;
    out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace v2r
