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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "v2r/harness/endpoint.hpp"

namespace v2r {

// First integer in the reply when it lies in [0, 10].
std::optional<int> parse_judge_verdict(std::string_view reply);

// Fills the rubric's {ground_truth} and {outputs} placeholders; outputs are
// listed one per line as "1. ...".
std::string build_judge_prompt(std::string_view rubric, const std::string& ground_truth,
                               const std::vector<std::string>& outputs);

// Asks the judge endpoint to rate a variation group and rescales the verdict
// to [0, 1]. Endpoint failures and missing verdicts give no score.
std::optional<double> llm_judge(const std::vector<std::string>& outputs, const std::string& ground_truth,
                                std::string_view rubric, ChatClient& client);

}  // namespace v2r
