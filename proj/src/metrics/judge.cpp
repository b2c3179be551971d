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

#include "v2r/metrics/judge.hpp"

#include <cctype>
#include <cstdio>

#include "v2r/harness/prompts.hpp"

namespace v2r {

std::optional<int> parse_judge_verdict(std::string_view reply) {
  for (std::size_t i = 0; i < reply.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(reply[i]))) continue;
    std::size_t j = i;
    long v = 0;
    while (j < reply.size() && std::isdigit(static_cast<unsigned char>(reply[j])) && v <= 10) {
      v = v * 10 + (reply[j] - '0');
      ++j;
    }
    if (v <= 10 && (j == reply.size() || !std::isdigit(static_cast<unsigned char>(reply[j])))) {
      return static_cast<int>(v);
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::string build_judge_prompt(std::string_view rubric, const std::string& ground_truth,
                               const std::vector<std::string>& outputs) {
  std::string listed;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    listed += std::to_string(i + 1) + ". " + outputs[i] + "\n";
  }
  if (!listed.empty()) listed.pop_back();
  return fill_template(rubric, {{"ground_truth", ground_truth}, {"outputs", listed}});
}

std::optional<double> llm_judge(const std::vector<std::string>& outputs, const std::string& ground_truth,
                                std::string_view rubric, ChatClient& client) {
  ChatRequest req;
  req.prompt = build_judge_prompt(rubric, ground_truth, outputs);
  const ChatResponse resp = client.complete(req);
  if (!resp.ok) {
    std::fprintf(stderr, "judge request failed: %s\n", resp.error.c_str());
    return std::nullopt;
  }
  const auto verdict = parse_judge_verdict(resp.text);
  if (!verdict) return std::nullopt;
  return *verdict / 10.0;
}

}  // namespace v2r
