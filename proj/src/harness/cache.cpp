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

#include "v2r/harness/cache.hpp"

#include <json.hpp>

#include "v2r/error.hpp"

namespace v2r {

ResponseCache::ResponseCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  std::size_t lineno = 0;
  while (in && std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      CacheEntry e{j.at("model").get<std::string>(), j.at("sample_id").get<std::string>(),
                   j.at("prompt_sha256").get<std::string>(), j.at("raw").get<std::string>(),
                   j.value("attempts", 1), j.value("latency_ms", 0.0)};
      Key key{e.model, e.sample_id, e.prompt_hash};
      entries_.insert_or_assign(std::move(key), std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError(path_.string() + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
}

std::optional<CacheEntry> ResponseCache::lookup(const std::string& model, const std::string& sample_id,
                                                const std::string& prompt_hash) const {
  std::lock_guard lock(mu_);
  const auto it = entries_.find(Key{model, sample_id, prompt_hash});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResponseCache::append(const CacheEntry& e) {
  nlohmann::ordered_json j;
  j["model"] = e.model;
  j["sample_id"] = e.sample_id;
  j["prompt_sha256"] = e.prompt_hash;
  j["raw"] = e.raw;
  j["attempts"] = e.attempts;
  j["latency_ms"] = e.latency_ms;
  const std::string line = j.dump() + "\n";

  std::lock_guard lock(mu_);
  if (!out_.is_open()) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    out_.open(path_, std::ios::app | std::ios::binary);
    if (!out_) throw IoError("cannot open cache " + path_.string());
  }
  out_ << line;
  out_.flush();
  if (!out_) throw IoError("cannot write cache " + path_.string());
  entries_.insert_or_assign(Key{e.model, e.sample_id, e.prompt_hash}, e);
}

std::size_t ResponseCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

}  // namespace v2r
