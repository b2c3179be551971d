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

namespace v2r {

// Direction reached by turning `label` clockwise by `rotation` degrees.
// Throws InvalidArgument for labels outside the eight-direction set or
// rotations that are not multiples of 45.
std::string remap_direction_label(std::string_view label, double rotation);

bool is_direction_label(std::string_view label);

}  // namespace v2r
