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

#include "v2r/core/config.hpp"

#include <fstream>
#include <set>

#include "v2r/error.hpp"

namespace v2r {
namespace {

using json = nlohmann::json;

// Accepts 0.25 or "1/4".
double parse_ratio(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return std::stod(s);
      return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument(where + ": expected a number or a fraction string");
}

template <typename F>
void with_path(const std::string& where, F&& f) {
  try {
    f();
  } catch (const json::exception& e) {
    throw InvalidArgument(where + ": " + e.what());
  }
}

}  // namespace

void validate_weights(const Weights& w) {
  if (w.consistency < 0 || w.stability < 0 || w.judge < 0) {
    throw InvalidArgument("weights must be non-negative");
  }
  if (w.consistency + w.stability + w.judge <= 0) {
    throw InvalidArgument("at least one weight must be positive");
  }
}

RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("config: expected an object");
  static const std::set<std::string> known{"seed",     "grid",       "scales",  "rotations",
                                           "contexts", "output_dir", "weights", "canvas"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw InvalidArgument("config." + key + ": unknown field");
  }
  RunConfig c;
  if (j.contains("seed")) with_path("config.seed", [&] { c.master_seed = j["seed"].get<std::uint64_t>(); });
  if (j.contains("grid")) with_path("config.grid", [&] { c.grid = j["grid"].get<int>(); });
  if (j.contains("scales")) {
    c.scales.clear();
    const auto& arr = j["scales"];
    if (!arr.is_array()) throw InvalidArgument("config.scales: expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      c.scales.push_back(parse_ratio(arr[i], "config.scales[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("rotations")) {
    with_path("config.rotations", [&] { c.rotations = j["rotations"].get<std::vector<double>>(); });
  }
  if (j.contains("contexts")) {
    with_path("config.contexts", [&] { c.contexts = j["contexts"].get<std::vector<std::string>>(); });
  }
  if (j.contains("output_dir")) {
    with_path("config.output_dir", [&] { c.output_dir = j["output_dir"].get<std::string>(); });
  }
  if (j.contains("canvas")) {
    with_path("config.canvas", [&] {
      const auto& cv = j["canvas"];
      if (!cv.is_array() || cv.size() != 2) throw InvalidArgument("config.canvas: expected [W, H]");
      c.canvas = {cv[0].get<int>(), cv[1].get<int>()};
    });
  }
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_object()) throw InvalidArgument("config.weights: expected an object");
    for (const auto& [key, value] : w.items()) {
      const auto where = "config.weights." + key;
      double v = 0;
      with_path(where, [&] { v = value.get<double>(); });
      if (key == "consistency") {
        c.weights.consistency = v;
      } else if (key == "stability") {
        c.weights.stability = v;
      } else if (key == "judge") {
        c.weights.judge = v;
      } else {
        throw InvalidArgument(where + ": unknown field");
      }
    }
    validate_weights(c.weights);
  }
  return c;
}

nlohmann::ordered_json run_config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["seed"] = c.master_seed;
  j["grid"] = c.grid;
  j["scales"] = c.scales;
  j["rotations"] = c.rotations;
  j["contexts"] = c.contexts;
  j["output_dir"] = c.output_dir;
  j["weights"] = {{"consistency", c.weights.consistency},
                  {"stability", c.weights.stability},
                  {"judge", c.weights.judge}};
  j["canvas"] = {c.canvas.width, c.canvas.height};
  return j;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
  return run_config_from_json(j);
}

}  // namespace v2r
