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

#include "v2r/synth/campaign.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "v2r/data.hpp"
#include "v2r/error.hpp"
#include "v2r/image/png.hpp"

namespace v2r {
namespace {

using json = nlohmann::json;

template <typename T, typename F>
std::vector<T> read_list(const json& obj, const std::string& where, const char* key, F&& convert) {
  const std::string path = where + "." + key;
  if (!obj.contains(key)) throw InvalidArgument(path + ": missing");
  const auto& arr = obj.at(key);
  if (!arr.is_array() || arr.empty()) throw InvalidArgument(path + ": expected a non-empty array");
  std::vector<T> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string item = path + "[" + std::to_string(i) + "]";
    try {
      out.push_back(convert(arr[i], item));
    } catch (const json::exception& e) {
      throw InvalidArgument(item + ": " + e.what());
    }
  }
  return out;
}

ValueRange to_range(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument(where + ": expected [lo, hi]");
  ValueRange r{j[0].get<int>(), j[1].get<int>()};
  if (r.hi <= r.lo) throw InvalidArgument(where + ": empty range");
  return r;
}

int read_int(const json& obj, const std::string& where, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    const int v = obj.at(key).get<int>();
    if (v < 0) throw InvalidArgument(where + "." + key + ": must be non-negative");
    return v;
  } catch (const json::exception& e) {
    throw InvalidArgument(where + "." + key + ": " + e.what());
  }
}

const json& section(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_object()) {
    throw InvalidArgument(std::string("presets.") + key + ": expected an object");
  }
  return j.at(key);
}

std::string campaign_id(Task task, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "-%06zu", i);
  return std::string(to_string(task)) + buf;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

// Runs gen(i) for every spec on `threads` workers, writes the image and
// keeps records in plan order.
template <typename Spec>
std::vector<SampleRecord> render_images(
    const std::vector<Spec>& specs, const std::filesystem::path& out_dir, Task task,
    std::uint64_t master_seed, unsigned threads,
    const std::function<GeneratedSample(const Spec&, std::uint64_t, const std::string&)>& gen) {
  ensure_dir(out_dir / "images");
  std::vector<SampleRecord> records(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      try {
        const std::uint64_t seed = derive_seed(master_seed, to_string(task), i);
        GeneratedSample s = gen(specs[i], seed, campaign_id(task, i));
        write_png(s.image, out_dir / *s.record.image_path);
        records[i] = std::move(s.record);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace

CampaignPresets presets_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("presets: expected an object");
  CampaignPresets p;
  auto as_int = [](const json& v, const std::string&) { return v.get<int>(); };
  auto as_bool = [](const json& v, const std::string&) { return v.get<bool>(); };
  auto as_string = [](const json& v, const std::string&) { return v.get<std::string>(); };

  const json& c = section(j, "coordinate");
  p.coordinate.ranges = read_list<ValueRange>(c, "presets.coordinate", "ranges", to_range);
  p.coordinate.dimensions = read_list<int>(c, "presets.coordinate", "dimensions", as_int);
  p.coordinate.grid = read_list<bool>(c, "presets.coordinate", "grid", as_bool);
  p.coordinate.reference_lines = read_list<bool>(c, "presets.coordinate", "reference_lines", as_bool);
  p.coordinate.per_config = read_int(c, "presets.coordinate", "per_config", 10);

  const json& pa = section(j, "path");
  p.path.point_counts = read_list<int>(pa, "presets.path", "point_counts", as_int);
  p.path.ranges = read_list<ValueRange>(pa, "presets.path", "ranges", to_range);
  p.path.per_config = read_int(pa, "presets.path", "per_config", 100);

  const json& t = section(j, "text-matrix");
  p.text.sizes = read_list<int>(t, "presets.text-matrix", "sizes", as_int);
  p.text.words = read_list<std::string>(t, "presets.text-matrix", "words", as_string);
  p.text.backgrounds = read_list<MatrixBackground>(
      t, "presets.text-matrix", "backgrounds",
      [](const json& v, const std::string&) { return parse_matrix_background(v.get<std::string>()); });
  p.text.per_config = read_int(t, "presets.text-matrix", "per_config", 1);

  const json& o = section(j, "ocr");
  p.ocr.texts = read_list<std::string>(o, "presets.ocr", "texts", as_string);
  p.ocr.blur_levels = read_list<BlurLevel>(
      o, "presets.ocr", "blur_levels",
      [](const json& v, const std::string&) { return parse_blur_level(v.get<std::string>()); });
  p.ocr.replacements = read_int(o, "presets.ocr", "replacements", 3);
  return p;
}

CampaignPresets default_presets() {
  static const CampaignPresets presets = presets_from_json(json::parse(data::presets_json()));
  return presets;
}

const std::vector<std::string>& default_ocr_texts() {
  static const std::vector<std::string> texts = default_presets().ocr.texts;
  return texts;
}

std::vector<CoordinateTaskSpec> plan_coordinate_campaign(const CoordinateCampaign& c,
                                                         std::uint64_t master_seed) {
  std::vector<CoordinateTaskSpec> specs;
  for (const auto& range : c.ranges) {
    for (int dims : c.dimensions) {
      for (bool grid : c.grid) {
        for (bool ref : c.reference_lines) {
          for (int k = 0; k < c.per_config; ++k) {
            Rng rng(derive_seed(master_seed, "coordinate", specs.size()));
            specs.push_back(sample_coordinate_spec(dims, range, ref, grid, rng));
          }
        }
      }
    }
  }
  return specs;
}

std::vector<PathTaskSpec> plan_path_campaign(const PathCampaign& c, std::uint64_t master_seed) {
  std::vector<PathTaskSpec> specs;
  for (int n : c.point_counts) {
    for (const auto& range : c.ranges) {
      for (int k = 0; k < c.per_config; ++k) {
        Rng rng(derive_seed(master_seed, "path", specs.size()));
        specs.push_back(sample_path_spec(n, range, rng));
      }
    }
  }
  return specs;
}

std::vector<TextMatrixSpec> plan_text_campaign(const TextCampaign& c, std::uint64_t master_seed) {
  std::vector<TextMatrixSpec> specs;
  for (int size : c.sizes) {
    for (const auto& word : c.words) {
      for (MatrixBackground bg : c.backgrounds) {
        for (int k = 0; k < c.per_config; ++k) {
          Rng rng(derive_seed(master_seed, "text-matrix", specs.size()));
          specs.push_back(sample_text_matrix_spec(size, word, bg, rng));
        }
      }
    }
  }
  return specs;
}

std::vector<OcrTaskSpec> plan_ocr_campaign(const OcrCampaign& c, std::uint64_t master_seed) {
  std::vector<OcrTaskSpec> specs;
  for (std::size_t t = 0; t < c.texts.size(); ++t) {
    Rng rng(derive_seed(master_seed, "ocr-replacements", t));
    const auto repl = sample_replacements(c.texts[t], c.replacements, rng);
    for (BlurLevel blur : c.blur_levels) specs.push_back({c.texts[t], repl, blur});
  }
  return specs;
}

std::vector<SampleRecord> render_coordinate_campaign(const std::vector<CoordinateTaskSpec>& specs,
                                                     const std::filesystem::path& out_dir,
                                                     std::uint64_t master_seed, unsigned threads) {
  return render_images<CoordinateTaskSpec>(specs, out_dir, Task::kCoordinate, master_seed, threads,
                                           gen_coordinate_sample);
}

std::vector<SampleRecord> render_path_campaign(const std::vector<PathTaskSpec>& specs,
                                               const std::filesystem::path& out_dir,
                                               std::uint64_t master_seed, unsigned threads) {
  return render_images<PathTaskSpec>(specs, out_dir, Task::kPath, master_seed, threads,
                                     gen_path_sample);
}

std::vector<SampleRecord> render_text_campaign(const std::vector<TextMatrixSpec>& specs,
                                               const std::filesystem::path& out_dir,
                                               std::uint64_t master_seed) {
  ensure_dir(out_dir / "texts");
  std::vector<SampleRecord> records;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const std::string id = campaign_id(Task::kTextMatrix, i);
    GeneratedText g = gen_text_matrix(specs[i], derive_seed(master_seed, "text-matrix", i), id);
    const auto path = out_dir / "texts" / (id + ".txt");
    std::ofstream out(path, std::ios::binary);
    out << g.text;
    if (!out) throw IoError("cannot write " + path.string());
    for (auto& r : g.records) records.push_back(std::move(r));
  }
  return records;
}

std::vector<SampleRecord> render_ocr_campaign(const std::vector<OcrTaskSpec>& specs,
                                              const std::filesystem::path& out_dir,
                                              std::uint64_t master_seed, unsigned threads) {
  return render_images<OcrTaskSpec>(specs, out_dir, Task::kOcr, master_seed, threads, gen_ocr_sample);
}

}  // namespace v2r
