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
#include <string>
#include <vector>

#include "v2r/core/manifest.hpp"
#include "v2r/harness/endpoint.hpp"
#include "v2r/harness/parse.hpp"
#include "v2r/harness/prompts.hpp"

namespace v2r {

struct ModelOutput {
  std::string sample_id;
  std::string model;
  std::string raw;
  Answer parsed;
  bool failed = false;
  std::string error;
  double latency_ms = 0.0;
  int attempts = 0;
};

struct EvalSummary {
  std::size_t total = 0;
  std::size_t cached = 0;
  std::size_t requested = 0;
  std::size_t failed = 0;
  std::size_t unparseable = 0;
};

struct EvalResult {
  std::vector<ModelOutput> outputs;  // manifest order
  EvalSummary summary;
};

struct EvalOptions {
  std::string model;
  std::filesystem::path cache_path;
  unsigned max_in_flight = 4;
  const PromptTable* prompts = nullptr;  // builtin when null
  const AnswerParser* parser = nullptr;  // builtin plus manifest object labels when null
};

// sha256 of the prompt text, a newline and the image's sha256 (empty for
// text-only records).
std::string prompt_hash(const std::string& prompt, const std::string& image_sha256);

// Evaluates every record through `client`. Cached responses are reused;
// new successful responses are appended to the cache. Failed records are
// marked and the run continues.
EvalResult run_eval(const Manifest& manifest, const std::filesystem::path& manifest_dir,
                    ChatClient& client, const EvalOptions& options);

// Reads the manifest, resolves auth (throws EndpointError before any request
// when the token is missing) and evaluates over HTTP.
EvalResult run_eval(const std::filesystem::path& manifest_path, const EndpointConfig& endpoint,
                    const std::filesystem::path& cache_path);

// One JSON object per line: id, model, status, raw, parsed, attempts and
// error when failed. Latency is kept in the cache only, so reruns from a warm
// cache reproduce the file byte for byte.
void write_outputs(const std::vector<ModelOutput>& outputs, const std::filesystem::path& path);

// Resolves parsed answers against `manifest`. Throws FormatError for
// malformed lines, duplicate ids or ids absent from the manifest.
std::vector<ModelOutput> read_outputs(const std::filesystem::path& path, const Manifest& manifest);

}  // namespace v2r
