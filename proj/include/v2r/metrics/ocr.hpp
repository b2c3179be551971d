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

#include <string_view>

#include "v2r/core/types.hpp"

namespace v2r {

struct OcrFidelity {
  double reported_as_written = 0.0;  // corrupted character reproduced
  double inferred_correction = 0.0;  // original character restored
};

// Scores each replacement position. The output word aligned to the source
// word is the k-th output word (case-insensitive) that has the same length
// and agrees with the source word outside its replaced positions, where k is
// the occurrence rank of that pattern among the source words. Unaligned
// positions count as omitted. No replacements gives (0, 0).
OcrFidelity ocr_fidelity(std::string_view raw, const OcrTruth& truth);

}  // namespace v2r
