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

#include "v2r/harness/prompts.hpp"

#include <fstream>
#include <sstream>

#include "v2r/data.hpp"
#include "v2r/error.hpp"

namespace v2r {

std::string fill_template(std::string_view tmpl, const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      const auto close = tmpl.find('}', i + 1);
      if (close != std::string_view::npos) {
        const auto it = values.find(std::string(tmpl.substr(i + 1, close - i - 1)));
        if (it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

const PromptTable& PromptTable::builtin() {
  static const PromptTable table = from_json(nlohmann::json::parse(data::prompts_json()));
  return table;
}

PromptTable PromptTable::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("prompts") || !j.at("prompts").is_object()) {
    throw InvalidArgument("prompt table: expected an object with a 'prompts' object");
  }
  PromptTable t;
  for (const auto& [key, value] : j.at("prompts").items()) {
    if (!value.is_string()) throw InvalidArgument("prompts." + key + ": expected a string");
    t.templates_.emplace(key, value.get<std::string>());
  }
  return t;
}

PromptTable PromptTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open prompt table " + path.string());
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

bool PromptTable::contains(std::string_view id) const { return templates_.find(id) != templates_.end(); }

const std::string& PromptTable::get(std::string_view id) const {
  const auto it = templates_.find(id);
  if (it == templates_.end()) throw InvalidArgument("unknown prompt id '" + std::string(id) + "'");
  return it->second;
}

std::string PromptTable::render(const SampleRecord& record,
                                const std::filesystem::path& manifest_dir) const {
  std::map<std::string, std::string> values;
  if (const auto* wp = std::get_if<WordPlacement>(&record.ground_truth)) values["word"] = wp->word;
  if (record.params.contains("text_path")) {
    const auto path = manifest_dir / record.params.at("text_path").get<std::string>();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    values["matrix"] = std::move(text);
  }
  if (record.params.contains("question")) {
    values["question"] = record.params.at("question").get<std::string>();
  }
  return fill_template(get(record.prompt_id), values);
}

}  // namespace v2r
