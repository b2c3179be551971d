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

#include "v2r/variation/enumerate.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "v2r/core/random.hpp"
#include "v2r/error.hpp"
#include "v2r/image/png.hpp"
#include "v2r/variation/compose.hpp"

namespace v2r {
namespace {

std::string variant_id(Task task, std::size_t asset, std::size_t flat) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "-a%02zu-%06zu", asset, flat);
  return std::string(to_string(task)) + buf;
}

}  // namespace

EnumerationResult enumerate_variants(const std::vector<Asset>& assets,
                                     const BackgroundBank& backgrounds,
                                     const VariationSpace& space,
                                     const EnumerationOptions& options) {
  namespace fs = std::filesystem;
  if (assets.empty()) throw InvalidArgument("no assets to enumerate");
  if (space.size() == 0) throw InvalidArgument("empty variation space");
  for (const auto& ctx : space.contexts) backgrounds.resolve(ctx);

  const fs::path image_dir = options.out_dir / options.image_subdir;
  std::error_code ec;
  fs::create_directories(image_dir, ec);
  if (ec) throw IoError("cannot create " + image_dir.string() + ": " + ec.message());

  const std::size_t per_asset = space.size();
  const std::size_t total = per_asset * assets.size();
  const std::string prompt = options.prompt_id.empty() ? std::string(to_string(options.task))
                                                       : options.prompt_id;

  struct Slot {
    std::optional<SampleRecord> record;
    std::optional<SkippedVariant> skipped;
  };
  std::vector<Slot> slots(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      {
        std::lock_guard lock(failure_mu);
        if (failure) return;
      }
      const std::size_t ai = i / per_asset;
      const std::size_t flat = i % per_asset;
      const Variation v = space.at(flat);
      const auto idx = space.decompose(flat);
      const std::string id = variant_id(options.task, ai, flat);
      try {
        Composition comp = apply_variation(assets[ai], backgrounds, v, space.canvas, options.task);
        const std::string rel = options.image_subdir + "/" + id + ".png";
        write_png(comp.image, options.out_dir / rel);

        SampleRecord r;
        r.id = id;
        r.task = options.task;
        r.image_path = rel;
        r.variation = v;
        r.ground_truth = std::move(comp.ground_truth);
        r.prompt_id = prompt;
        r.seed = derive_seed(options.master_seed, to_string(options.task), i);
        r.params["asset"] = assets[ai].label();
        r.params["asset_index"] = ai;
        r.params["grid"] = space.grid;
        r.params["cell"] = {static_cast<int>(idx.position) % space.grid,
                            static_cast<int>(idx.position) / space.grid};
        r.params["dims"] = {{"position", idx.position},
                            {"scale", idx.scale},
                            {"rotation", idx.rotation},
                            {"context", idx.context}};
        slots[i].record = std::move(r);
      } catch (const OutOfBoundsError& e) {
        slots[i].skipped = SkippedVariant{id, v, e.what()};
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned n = std::max(1u, options.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  EnumerationResult result;
  for (auto& s : slots) {
    if (s.record) result.records.push_back(std::move(*s.record));
    if (s.skipped) result.skipped.push_back(std::move(*s.skipped));
  }
  return result;
}

}  // namespace v2r
