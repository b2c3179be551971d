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

#include "v2r/report/score.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include "v2r/core/csv.hpp"
#include "v2r/core/hash.hpp"
#include "v2r/data.hpp"
#include "v2r/error.hpp"
#include "v2r/metrics/aggregate.hpp"
#include "v2r/metrics/judge.hpp"
#include "v2r/metrics/ocr.hpp"
#include "v2r/metrics/path.hpp"
#include "v2r/metrics/region.hpp"
#include "v2r/core/version.hpp"

namespace v2r {
namespace {

using ojson = nlohmann::ordered_json;

struct Scored {
  const SampleRecord* rec = nullptr;
  const ModelOutput* out = nullptr;  // null when missing
  bool correct = false;
  std::string raw;                   // empty when missing or failed
};

using Indices = std::vector<std::size_t>;
using Groups = std::vector<std::pair<std::string, Indices>>;  // first-appearance order

template <typename KeyFn>
Groups group_by(const std::vector<Scored>& items, const Indices& subset, KeyFn&& key) {
  Groups groups;
  std::map<std::string, std::size_t> pos;
  for (std::size_t i : subset) {
    const std::string k = key(items[i]);
    auto [it, fresh] = pos.emplace(k, groups.size());
    if (fresh) groups.push_back({k, {}});
    groups[it->second].second.push_back(i);
  }
  return groups;
}

ojson num(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }
ojson num(const std::optional<double>& v) { return v ? num(*v) : ojson(nullptr); }

double accuracy(const std::vector<Scored>& items, const Indices& idx) {
  if (idx.empty()) return std::nan("");
  std::size_t hits = 0;
  for (std::size_t i : idx) hits += items[i].correct ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(idx.size());
}

constexpr const char* kDims[] = {"position", "scale", "rotation", "context"};

ojson dim_value(const Variation& v, int d) {
  switch (d) {
    case 0:
      return ojson::array({v.position.x, v.position.y});
    case 1:
      return v.scale;
    case 2:
      return v.rotation;
    default:
      return v.context;
  }
}

std::string asset_key(const SampleRecord& r) {
  for (const char* k : {"asset_index", "asset", "base_id"}) {
    if (r.params.contains(k)) return r.params.at(k).dump();
  }
  return "";
}

std::string variation_key(const Variation& v, int skip) {
  std::string k;
  for (int d = 0; d < 4; ++d) {
    if (d != skip) k += dim_value(v, d).dump() + "|";
  }
  return k;
}

struct Stability {
  double semantic = 0.0;
  double token = 0.0;
};

// Mean S_s and S_t over groups.
Stability group_stability(const std::vector<Scored>& items, const Groups& groups, const Embedder& embedder) {
  Stability s;
  if (groups.empty()) return s;
  for (const auto& [_, idx] : groups) {
    std::vector<std::string> texts, ids;
    for (std::size_t i : idx) {
      texts.push_back(items[i].raw);
      ids.push_back(items[i].rec->id);
    }
    s.semantic += semantic_stability(texts, embedder, &ids);
    s.token += token_stability(texts);
  }
  s.semantic /= static_cast<double>(groups.size());
  s.token /= static_cast<double>(groups.size());
  return s;
}

std::optional<double> judge_groups(const std::vector<Scored>& items, const Groups& groups, ChatClient& client,
                                   std::string_view rubric) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& [_, idx] : groups) {
    std::vector<std::string> lines;
    std::string truth = format_answer(expected_answer(*items[idx.front()].rec));
    bool same = true;
    for (std::size_t i : idx) same = same && format_answer(expected_answer(*items[i].rec)) == truth;
    for (std::size_t i : idx) {
      lines.push_back(same ? items[i].raw
                           : items[i].raw + " (expected: " + format_answer(expected_answer(*items[i].rec)) + ")");
    }
    if (!same) truth = "given beside each answer";
    if (auto v = llm_judge(lines, truth, rubric, client)) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

// Slices over a params key in first-appearance order.
ojson param_slices(const std::vector<Scored>& items, const Indices& idx, const std::string& key,
                   const std::string& model, const std::string& task, std::string& table) {
  ojson arr = ojson::array();
  const auto groups = group_by(items, idx, [&](const Scored& s) {
    return key == "prompt_id" ? ojson(s.rec->prompt_id).dump()
                              : (s.rec->params.contains(key) ? s.rec->params.at(key).dump() : "null");
  });
  for (const auto& [k, g] : groups) {
    const double acc = accuracy(items, g);
    arr.push_back({{"value", ojson::parse(k)}, {"n", g.size()}, {"accuracy", num(acc)}});
    table += csv_row({model, task, key, k, std::to_string(g.size()), format_number(acc)});
  }
  return arr;
}

std::vector<std::string> slice_keys(Task task) {
  switch (task) {
    case Task::kCoordinate:
      return {"dimensions", "range", "grid", "reference_lines"};
    case Task::kPath:
      return {"n", "range"};
    case Task::kTextMatrix:
      return {"prompt_id", "size", "background"};
    case Task::kOcr:
      return {"blur"};
    default:
      return {};
  }
}

std::optional<std::vector<GridPoint>> as_path(const Scored& s) {
  if (!s.out || s.out->failed) return std::nullopt;
  if (const auto* p = std::get_if<CoordinatePath>(&s.out->parsed)) return p->points;
  return std::nullopt;
}

}  // namespace

ReportBundle score_outputs(const Manifest& manifest, const std::vector<ModelOutput>& outputs,
                           const ScoreOptions& options) {
  const HashedBowEmbedder default_embedder(256);
  const Embedder& embedder = options.embedder ? *options.embedder : default_embedder;
  const std::string rubric =
      options.judge_rubric.empty() ? std::string(data::judge_rubric()) : options.judge_rubric;

  std::map<std::string, const ModelOutput*> by_id;
  for (const auto& o : outputs) by_id[o.sample_id] = &o;
  std::map<std::string, bool> known;
  for (const auto& r : manifest.records) known[r.id] = true;
  for (const auto& o : outputs) {
    if (!known.count(o.sample_id)) throw FormatError("output id '" + o.sample_id + "' is not in the manifest");
  }
  std::string model;
  for (const auto& o : outputs) {
    if (!o.model.empty()) {
      model = o.model;
      break;
    }
  }

  std::vector<Scored> items;
  items.reserve(manifest.records.size());
  for (const auto& r : manifest.records) {
    Scored s;
    s.rec = &r;
    if (auto it = by_id.find(r.id); it != by_id.end()) {
      s.out = it->second;
      if (!s.out->failed) {
        s.raw = s.out->raw;
        s.correct = answer_is_correct(r, s.out->parsed);
      }
    }
    items.push_back(std::move(s));
  }

  ReportBundle b;
  b.table_csv = "model,task,dimension,value,n,accuracy\n";
  b.heatmap_csv = "task,col,row,n,accuracy\n";
  b.scale_curve_csv = "task,scale,n,accuracy\n";
  b.positional_csv = "task,index,n,accuracy\n";
  b.region_bias_csv = "task,region,cells,accuracy\n";

  ojson weights{{"consistency", options.weights.consistency},
                {"stability", options.weights.stability},
                {"judge", options.weights.judge}};
  ojson meta;
  meta["tool_version"] = kVersion;
  meta["model"] = model;
  meta["seed"] = manifest.header ? ojson(manifest.header->seed) : ojson(nullptr);
  meta["weights"] = weights;
  meta["embedder"] = options.embedder_name;
  meta["judge"] = options.judge != nullptr;
  meta["config_hash"] =
      sha256_hex(ojson{{"weights", weights}, {"embedder", options.embedder_name}, {"judge", options.judge != nullptr}}
                     .dump());
  meta["records"] = items.size();
  meta["outputs"] = outputs.size();

  ojson tasks = ojson::object();
  for (Task task : all_tasks()) {
    Indices idx;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].rec->task == task) idx.push_back(i);
    }
    if (idx.empty()) continue;
    const std::string tname(to_string(task));

    ojson t;
    std::size_t correct = 0, failed = 0, missing = 0, unparseable = 0;
    for (std::size_t i : idx) {
      const auto& s = items[i];
      correct += s.correct ? 1 : 0;
      if (!s.out) {
        ++missing;
      } else if (s.out->failed) {
        ++failed;
      } else if (is_unparseable(s.out->parsed)) {
        ++unparseable;
      }
    }
    const double acc = accuracy(items, idx);
    t["n"] = idx.size();
    t["correct"] = correct;
    t["accuracy"] = num(acc);
    t["failed"] = failed;
    t["missing"] = missing;
    t["unparseable"] = unparseable;
    b.table_csv += csv_row({model, tname, "all", "", std::to_string(idx.size()), format_number(acc)});

    Indices varied;
    for (std::size_t i : idx) {
      if (items[i].rec->variation) varied.push_back(i);
    }
    if (!varied.empty()) {
      // C_m over per-variation accuracies (assets pooled); stability over
      // each asset's outputs across all its variations.
      const auto per_variation =
          group_by(items, varied, [](const Scored& s) { return variation_key(*s.rec->variation, -1); });
      std::vector<double> accs;
      for (const auto& [_, g] : per_variation) accs.push_back(accuracy(items, g));
      const auto per_asset = group_by(items, varied, [](const Scored& s) { return asset_key(*s.rec); });
      const Stability st = group_stability(items, per_asset, embedder);

      StabilityScores scores;
      scores.consistency = consistency(accs);
      scores.semantic = st.semantic;
      scores.token = st.token;
      if (options.judge) scores.judge = judge_groups(items, per_asset, *options.judge, rubric);
      ojson rob;
      rob["C_m"] = num(scores.consistency);
      rob["S_s"] = num(scores.semantic);
      rob["S_t"] = num(scores.token);
      rob["judge"] = num(scores.judge);
      rob["aggregate"] = aggregate_robustness(scores, options.weights);
      rob["variations"] = per_variation.size();
      rob["groups"] = per_asset.size();
      t["robustness"] = rob;

      ojson dims = ojson::object();
      for (int d = 0; d < 4; ++d) {
        const auto slices = group_by(items, varied, [d](const Scored& s) { return dim_value(*s.rec->variation, d).dump(); });
        ojson arr = ojson::array();
        std::vector<double> slice_accs;
        for (const auto& [k, g] : slices) {
          const double a = accuracy(items, g);
          slice_accs.push_back(a);
          arr.push_back({{"value", ojson::parse(k)}, {"n", g.size()}, {"accuracy", num(a)}});
          b.table_csv += csv_row({model, tname, kDims[d], k, std::to_string(g.size()), format_number(a)});
          if (d == 1) b.scale_curve_csv += csv_row({tname, k, std::to_string(g.size()), format_number(a)});
        }
        const auto groups = group_by(items, varied, [d](const Scored& s) {
          return asset_key(*s.rec) + "#" + variation_key(*s.rec->variation, d);
        });
        const Stability ds = group_stability(items, groups, embedder);
        ojson dj;
        dj["C_m"] = consistency(slice_accs);
        dj["S_s"] = ds.semantic;
        dj["S_t"] = ds.token;
        dj["slices"] = arr;
        dims[kDims[d]] = dj;
      }
      t["dimensions"] = dims;
    }

    // Per-anchor accuracy map and middle/surrounding split.
    Indices celled;
    int grid = 0;
    for (std::size_t i : idx) {
      const auto& p = items[i].rec->params;
      if (p.contains("grid") && p.contains("cell") && p.at("grid").is_number_integer()) {
        grid = p.at("grid").get<int>();
        celled.push_back(i);
      }
    }
    if (!celled.empty() && grid >= 1) {
      std::vector<Indices> cells(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));
      for (std::size_t i : celled) {
        const auto& cell = items[i].rec->params.at("cell");
        const int col = cell.at(0).get<int>(), row = cell.at(1).get<int>();
        if (col < 0 || row < 0 || col >= grid || row >= grid) throw FormatError("record " + items[i].rec->id + ": cell outside the grid");
        cells[static_cast<std::size_t>(row * grid + col)].push_back(i);
      }
      std::vector<double> map;
      ojson heat = ojson::array();
      for (int row = 0; row < grid; ++row) {
        ojson line = ojson::array();
        for (int col = 0; col < grid; ++col) {
          const auto& g = cells[static_cast<std::size_t>(row * grid + col)];
          const double a = accuracy(items, g);
          map.push_back(a);
          line.push_back(num(a));
          b.heatmap_csv += csv_row({tname, std::to_string(col), std::to_string(row), std::to_string(g.size()), format_number(a)});
        }
        heat.push_back(line);
      }
      t["position_map"] = {{"grid", grid}, {"accuracy", heat}};
      if (grid >= 3) {
        const RegionBias rb = region_bias(map, grid);
        t["region_bias"] = {{"middle", num(rb.middle)},
                            {"surrounding", num(rb.surrounding)},
                            {"middle_cells", rb.middle_cells},
                            {"surrounding_cells", rb.surrounding_cells}};
        b.region_bias_csv += csv_row({tname, "middle", std::to_string(rb.middle_cells), format_number(rb.middle)});
        b.region_bias_csv += csv_row({tname, "surrounding", std::to_string(rb.surrounding_cells), format_number(rb.surrounding)});
      }
    }

    const auto keys = slice_keys(task);
    if (!keys.empty()) {
      ojson slices = ojson::object();
      for (const auto& k : keys) slices[k] = param_slices(items, idx, k, model, tname, b.table_csv);
      t["slices"] = slices;
    }

    if (task == Task::kCoordinate) {
      std::vector<std::optional<IntTuple>> preds;
      std::vector<IntTuple> gts;
      for (std::size_t i : idx) {
        gts.push_back(std::get<Coordinate>(items[i].rec->ground_truth).values);
        const auto* c = items[i].out && !items[i].out->failed ? std::get_if<Coordinate>(&items[i].out->parsed) : nullptr;
        preds.push_back(c ? std::optional<IntTuple>(c->values) : std::nullopt);
      }
      t["PA"] = point_accuracy(preds, gts);
    }

    if (task == Task::kPath) {
      std::vector<PathSample> samples;
      std::vector<std::optional<IntTuple>> point_preds;
      std::vector<IntTuple> point_gts;
      double ema = 0, ia = 0, sa = 0;
      std::map<int, std::array<double, 4>> by_n;  // n -> ema, ia, sa, count
      for (std::size_t i : idx) {
        const auto& gt = std::get<CoordinatePath>(items[i].rec->ground_truth).points;
        const auto pred = as_path(items[i]);
        const PathEval e = path_metrics(pred, gt);
        ema += e.ema, ia += e.pm_ia, sa += e.pm_sa;
        auto& row = by_n[static_cast<int>(gt.size())];
        row[0] += e.ema, row[1] += e.pm_ia, row[2] += e.pm_sa, row[3] += 1;
        samples.push_back({pred, gt});
        for (std::size_t k = 0; k < gt.size(); ++k) {
          point_gts.push_back({gt[k][0], gt[k][1]});
          if (pred && k < pred->size()) {
            point_preds.push_back(IntTuple{(*pred)[k][0], (*pred)[k][1]});
          } else {
            point_preds.push_back(std::nullopt);
          }
        }
      }
      const double n = static_cast<double>(idx.size());
      ojson pj;
      pj["EMA"] = ema / n;
      pj["PM_IA"] = ia / n;
      pj["PM_SA"] = sa / n;
      pj["PA"] = point_accuracy(point_preds, point_gts);
      ojson per_n = ojson::array();
      for (const auto& [pn, row] : by_n) {
        per_n.push_back({{"n", pn}, {"count", row[3]}, {"EMA", row[0] / row[3]}, {"PM_IA", row[1] / row[3]}, {"PM_SA", row[2] / row[3]}});
      }
      pj["by_n"] = per_n;
      const PositionalCurve curve = positional_accuracy_curve(samples);
      pj["positional_accuracy"] = curve.accuracy;
      pj["positional_counts"] = curve.counts;
      for (std::size_t k = 0; k < curve.accuracy.size(); ++k) {
        b.positional_csv += csv_row({tname, std::to_string(k), std::to_string(curve.counts[k]), format_number(curve.accuracy[k])});
      }
      t["path"] = pj;
    }

    if (task == Task::kOcr) {
      std::map<std::string, std::array<double, 3>> by_blur;
      double kept = 0, fixed = 0;
      for (std::size_t i : idx) {
        const auto& truth = std::get<OcrTruth>(items[i].rec->ground_truth);
        const OcrFidelity f = ocr_fidelity(items[i].raw, truth);
        kept += f.reported_as_written, fixed += f.inferred_correction;
        auto& row = by_blur[truth.blur];
        row[0] += f.reported_as_written, row[1] += f.inferred_correction, row[2] += 1;
      }
      const double n = static_cast<double>(idx.size());
      ojson oj;
      oj["reported_as_written"] = kept / n;
      oj["inferred_correction"] = fixed / n;
      ojson blur = ojson::array();
      for (const auto& [level, row] : by_blur) {
        blur.push_back({{"blur", level}, {"n", row[2]}, {"reported_as_written", row[0] / row[2]}, {"inferred_correction", row[1] / row[2]}});
      }
      oj["by_blur"] = blur;
      t["ocr"] = oj;
    }

    tasks[tname] = t;
  }

  b.report["meta"] = meta;
  b.report["tasks"] = tasks;
  return b;
}

void write_report_bundle(const ReportBundle& b, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  auto put = [&](const char* name, const std::string& text) {
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw IoError("cannot write " + path.string());
  };
  put("report.json", b.report.dump(2) + "\n");
  put("table.csv", b.table_csv);
  put("heatmap.csv", b.heatmap_csv);
  put("scale_curve.csv", b.scale_curve_csv);
  put("positional_accuracy.csv", b.positional_csv);
  put("region_bias.csv", b.region_bias_csv);
}

}  // namespace v2r
