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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "v2r/core/types.hpp"

namespace v2r {

// Prompt templates keyed by prompt id. Templates may contain {matrix},
// {word} and {question} placeholders.
class PromptTable {
 public:
  // The table shipped in data/prompts.json.
  static const PromptTable& builtin();
  // Throws InvalidArgument for malformed tables.
  static PromptTable from_json(const nlohmann::json& j);
  static PromptTable load(const std::filesystem::path& path);

  bool contains(std::string_view id) const;
  // Throws InvalidArgument for unknown ids.
  const std::string& get(std::string_view id) const;

  // Fills the template of `record.prompt_id`. Text matrices are read from
  // params.text_path relative to `manifest_dir`; {question} comes from
  // params.question. Throws IoError when the text file cannot be read.
  std::string render(const SampleRecord& record, const std::filesystem::path& manifest_dir) const;

 private:
  std::map<std::string, std::string, std::less<>> templates_;
};

// Replaces every "{key}" with its value; unknown placeholders are kept.
std::string fill_template(std::string_view tmpl, const std::map<std::string, std::string>& values);

}  // namespace v2r
