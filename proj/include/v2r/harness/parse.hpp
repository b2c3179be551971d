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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "v2r/core/types.hpp"

namespace v2r {

struct Unparseable {
  friend bool operator==(const Unparseable&, const Unparseable&) = default;
};

struct Count {
  int value = 0;
  friend bool operator==(const Count&, const Count&) = default;
};

struct FreeText {
  std::string value;
  friend bool operator==(const FreeText&, const FreeText&) = default;
};

// A parsed model answer. Coordinates also carry (row, col) text positions.
using Answer = std::variant<Unparseable, Label, Coordinate, CoordinatePath, Count, FreeText>;

enum class AnswerKind { kLabel, kTuple, kPath, kCount, kText };

// The answer type asked for by a (task, prompt id) pair. Text-matrix
// records are split by prompt id.
AnswerKind answer_kind(Task task, std::string_view prompt_id);

bool is_unparseable(const Answer& a);

// The answer a perfect model gives for this record.
Answer expected_answer(const SampleRecord& record);

// Canonical text: "top-right", "(3, 7)", "(0,)", "[(0, 0), (5, 5)]", "1".
// Unparseable formats as "unparseable".
std::string format_answer(const Answer& a);

// JSON form stored in outputs files: string, [ints], [[x, y], ...], int or
// null for unparseable.
nlohmann::ordered_json answer_to_json(const Answer& a);
// Throws FormatError when `j` does not fit `kind`.
Answer answer_from_json(AnswerKind kind, const nlohmann::ordered_json& j);

// Lowercases, maps hyphens and punctuation other than tuple syntax to
// spaces and collapses whitespace.
std::string normalize_answer_text(std::string_view raw);

// Task-aware answer extraction. Synonym tables come from versioned data;
// extra object labels (e.g. from a custom asset bank) can be registered.
class AnswerParser {
 public:
  // Parser over data/synonyms.json.
  static const AnswerParser& builtin();
  static AnswerParser from_json(const nlohmann::json& synonyms);

  void add_object_label(const std::string& label);

  // Total: never throws, returns Unparseable when nothing matches.
  Answer parse(AnswerKind kind, Task task, std::string_view raw) const;
  Answer parse(const SampleRecord& record, std::string_view raw) const;

 private:
  struct Phrase {
    std::vector<std::string> tokens;
    std::string label;
  };

  // Earliest match in the token stream, longest phrase on ties.
  static std::optional<std::string> match_phrases(const std::vector<Phrase>& phrases,
                                                  const std::vector<std::string>& tokens);

  std::vector<Phrase> directions_;
  std::vector<Phrase> objects_;
  std::vector<Phrase> text_words_;
  std::vector<std::pair<std::string, int>> numbers_;
};

// Convenience over the builtin parser: parse_answer(task, raw) for the
// task's default prompt.
Answer parse_answer(Task task, std::string_view raw);

bool answer_is_correct(const SampleRecord& record, const Answer& answer);

}  // namespace v2r
