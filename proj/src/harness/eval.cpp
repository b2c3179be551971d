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

#include "v2r/harness/eval.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <iterator>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "v2r/core/hash.hpp"
#include "v2r/error.hpp"
#include "v2r/harness/cache.hpp"

namespace v2r {
namespace {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read image " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

std::string prompt_hash(const std::string& prompt, const std::string& image_sha256) {
  return sha256_hex(prompt + "\n" + image_sha256);
}

EvalResult run_eval(const Manifest& manifest, const std::filesystem::path& manifest_dir,
                    ChatClient& client, const EvalOptions& options) {
  if (options.model.empty()) throw InvalidArgument("eval: model id is empty");
  if (options.max_in_flight < 1) throw InvalidArgument("eval: max in-flight must be at least 1");
  const PromptTable& prompts = options.prompts ? *options.prompts : PromptTable::builtin();

  AnswerParser local_parser = AnswerParser::builtin();
  if (!options.parser) {
    for (const auto& r : manifest.records) {
      if (r.task == Task::kObject) local_parser.add_object_label(std::get<Label>(r.ground_truth).value);
    }
  }
  const AnswerParser& parser = options.parser ? *options.parser : local_parser;

  // Prompts and images are resolved up front so I/O errors surface before
  // any request goes out.
  struct Job {
    ChatRequest request;
    std::string hash;
  };
  std::vector<Job> jobs(manifest.records.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& r = manifest.records[i];
    jobs[i].request.prompt = prompts.render(r, manifest_dir);
    std::string image_sha;
    if (r.image_path) {
      jobs[i].request.png = read_bytes(manifest_dir / *r.image_path);
      image_sha = sha256_hex(std::span<const std::uint8_t>(jobs[i].request.png));
    }
    jobs[i].hash = prompt_hash(jobs[i].request.prompt, image_sha);
  }

  ResponseCache cache(options.cache_path);
  EvalResult result;
  result.outputs.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> cached{0}, requested{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const auto& r = manifest.records[i];
      ModelOutput& out = result.outputs[i];
      out.sample_id = r.id;
      out.model = options.model;
      try {
        if (auto hit = cache.lookup(options.model, r.id, jobs[i].hash)) {
          ++cached;
          out.raw = hit->raw;
          out.attempts = hit->attempts;
          out.latency_ms = hit->latency_ms;
        } else {
          ++requested;
          ChatResponse resp = client.complete(jobs[i].request);
          out.attempts = resp.attempts;
          out.latency_ms = resp.latency_ms;
          if (resp.ok) {
            out.raw = std::move(resp.text);
            cache.append({options.model, r.id, jobs[i].hash, out.raw, out.attempts, out.latency_ms});
          } else {
            out.failed = true;
            out.error = resp.error.empty() ? "request failed" : resp.error;
          }
        }
        out.parsed = out.failed ? Answer{Unparseable{}} : parser.parse(r, out.raw);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < options.max_in_flight; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  result.summary.total = jobs.size();
  result.summary.cached = cached.load();
  result.summary.requested = requested.load();
  for (const auto& o : result.outputs) {
    if (o.failed) {
      ++result.summary.failed;
    } else if (is_unparseable(o.parsed)) {
      ++result.summary.unparseable;
    }
  }
  return result;
}

EvalResult run_eval(const std::filesystem::path& manifest_path, const EndpointConfig& endpoint,
                    const std::filesystem::path& cache_path) {
  validate(endpoint);
  auto token = resolve_token(endpoint);
  const Manifest manifest = read_manifest(manifest_path);
  HttpChatClient client(endpoint, std::move(token));
  EvalOptions opts;
  opts.model = endpoint.model;
  opts.cache_path = cache_path;
  opts.max_in_flight = static_cast<unsigned>(endpoint.max_in_flight);
  return run_eval(manifest, manifest_path.parent_path(), client, opts);
}

void write_outputs(const std::vector<ModelOutput>& outputs, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& o : outputs) {
    nlohmann::ordered_json j;
    j["id"] = o.sample_id;
    j["model"] = o.model;
    j["status"] = o.failed ? "failed" : "ok";
    j["raw"] = o.raw;
    j["parsed"] = answer_to_json(o.parsed);
    j["attempts"] = o.attempts;
    if (o.failed) j["error"] = o.error;
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("cannot write " + path.string());
}

std::vector<ModelOutput> read_outputs(const std::filesystem::path& path, const Manifest& manifest) {
  std::map<std::string, const SampleRecord*> by_id;
  for (const auto& r : manifest.records) by_id.emplace(r.id, &r);

  std::ifstream in(path);
  if (!in) throw IoError("cannot open outputs " + path.string());
  std::vector<ModelOutput> outputs;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(lineno) + ": ";
    try {
      const auto j = nlohmann::ordered_json::parse(line);
      ModelOutput o;
      o.sample_id = j.at("id").get<std::string>();
      const auto it = by_id.find(o.sample_id);
      if (it == by_id.end()) throw FormatError(where + "id '" + o.sample_id + "' is not in the manifest");
      if (!seen.insert(o.sample_id).second) throw FormatError(where + "duplicate id '" + o.sample_id + "'");
      o.model = j.at("model").get<std::string>();
      const auto status = j.at("status").get<std::string>();
      if (status != "ok" && status != "failed") throw FormatError(where + "unknown status '" + status + "'");
      o.failed = status == "failed";
      o.raw = j.at("raw").get<std::string>();
      o.attempts = j.value("attempts", 0);
      o.error = j.value("error", "");
      const auto& rec = *it->second;
      o.parsed = answer_from_json(answer_kind(rec.task, rec.prompt_id), j.at("parsed"));
      outputs.push_back(std::move(o));
    } catch (const FormatError& e) {
      const std::string msg = e.what();
      if (msg.rfind(path.string(), 0) == 0) throw;
      throw FormatError(where + msg);
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(where + e.what());
    }
  }
  return outputs;
}

}  // namespace v2r
