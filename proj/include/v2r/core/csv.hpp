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
#include <vector>

namespace v2r {

// Quotes fields containing commas, quotes or line breaks.
std::string csv_escape(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

// Shortest round-trip decimal form; NaN and infinities format as "".
std::string format_number(double v);

}  // namespace v2r
