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
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

namespace v2r {

struct CacheEntry {
  std::string model;
  std::string sample_id;
  std::string prompt_hash;  // sha256 over prompt text and image digest
  std::string raw;
  int attempts = 1;
  double latency_ms = 0.0;
};

// Append-only JSONL cache of successful responses keyed by
// (model, sample id, prompt hash). Appends are serialized.
class ResponseCache {
 public:
  // Loads existing entries; a missing file is an empty cache. Throws
  // FormatError naming the line for malformed entries.
  explicit ResponseCache(std::filesystem::path path);

  std::optional<CacheEntry> lookup(const std::string& model, const std::string& sample_id,
                                   const std::string& prompt_hash) const;
  // Throws IoError when the line cannot be written.
  void append(const CacheEntry& entry);
  std::size_t size() const;

 private:
  using Key = std::tuple<std::string, std::string, std::string>;

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<Key, CacheEntry> entries_;
  std::ofstream out_;
};

}  // namespace v2r
