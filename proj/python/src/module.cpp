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

// Python bindings. Structured values cross the boundary as JSON text; the
// v2r package turns them into dicts.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "v2r/core/config.hpp"
#include "v2r/core/manifest.hpp"
#include "v2r/core/version.hpp"
#include "v2r/diagnostics/alignment.hpp"
#include "v2r/diagnostics/decode.hpp"
#include "v2r/diagnostics/matrix.hpp"
#include "v2r/diagnostics/probe.hpp"
#include "v2r/error.hpp"
#include "v2r/harness/eval.hpp"
#include "v2r/metrics/path.hpp"
#include "v2r/metrics/region.hpp"
#include "v2r/metrics/stability.hpp"
#include "v2r/report/generate.hpp"
#include "v2r/report/score.hpp"
#include "v2r/variation/direction.hpp"

namespace py = pybind11;
using namespace v2r;

namespace {

using FloatArray = py::array_t<float, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const FloatArray& a) {
  if (a.ndim() != 2) throw InvalidArgument("expected a 2-d array");
  Matrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
  std::copy(a.data(), a.data() + a.size(), m.data.begin());
  return m;
}

py::array_t<float> to_array(const Matrix& m) {
  py::array_t<float> out({m.rows, m.cols});
  std::copy(m.data.begin(), m.data.end(), out.mutable_data());
  return out;
}

std::vector<GridPoint> to_points(const std::vector<std::pair<int, int>>& v) {
  std::vector<GridPoint> out;
  for (const auto& [x, y] : v) out.push_back({x, y});
  return out;
}

std::string generate_json(const std::vector<std::string>& tasks, const std::filesystem::path& out_dir,
                          const std::string& config_json, const std::string& presets_json, unsigned threads) {
  GenerateOptions o;
  for (const auto& t : tasks) o.tasks.push_back(parse_task(t));
  o.out_dir = out_dir;
  o.threads = threads;
  if (!config_json.empty()) o.config = run_config_from_json(nlohmann::json::parse(config_json));
  if (!presets_json.empty()) o.presets = presets_from_json(nlohmann::json::parse(presets_json));
  GenerateSummary s;
  {
    py::gil_scoped_release release;
    s = generate(o);
  }
  nlohmann::ordered_json j;
  j["manifest"] = s.manifest.string();
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [task, n] : s.counts) j["counts"][std::string(to_string(task))] = n;
  j["skipped"] = s.skipped;
  return j.dump();
}

std::string read_manifest_json(const std::filesystem::path& path) {
  const Manifest m = read_manifest(path);
  nlohmann::ordered_json j;
  j["header"] = nullptr;
  if (m.header) {
    j["header"] = {{"canvas", {m.header->canvas.width, m.header->canvas.height}},
                   {"seed", m.header->seed},
                   {"tool_version", m.header->tool_version},
                   {"extra", m.header->extra}};
  }
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : m.records) j["records"].push_back(record_to_json(r));
  return j.dump();
}

std::string score_json(const std::filesystem::path& manifest_path, const std::filesystem::path& outputs_path,
                       const std::optional<std::filesystem::path>& out_dir, std::array<double, 3> weights) {
  const Manifest m = read_manifest(manifest_path);
  const auto outputs = read_outputs(outputs_path, m);
  ScoreOptions o;
  o.weights = {weights[0], weights[1], weights[2]};
  validate_weights(o.weights);
  const ReportBundle b = score_outputs(m, outputs, o);
  if (out_dir) write_report_bundle(b, *out_dir);
  return b.report.dump();
}

py::list decode_py(const FloatArray& h, const FloatArray& embeddings, const std::vector<std::string>& vocab,
                   std::size_t k) {
  if (h.ndim() != 1) throw InvalidArgument("feature must be a 1-d array");
  const Matrix e = to_matrix(embeddings);
  const auto r = decode_feature({h.data(), static_cast<std::size_t>(h.size())}, e, vocab, k);
  py::list out;
  for (const auto& t : r) out.append(py::make_tuple(t.index, t.token, t.probability));
  return out;
}

}  // namespace

PYBIND11_MODULE(_v2r, m) {
  m.doc() = "Visual robustness benchmark core";
  m.attr("__version__") = kVersion;

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<EndpointError>(m, "EndpointError", PyExc_RuntimeError);

  m.def("generate_json", &generate_json, py::arg("tasks"), py::arg("out_dir"), py::arg("config_json") = "",
        py::arg("presets_json") = "", py::arg("threads") = 1);
  m.def("read_manifest_json", &read_manifest_json, py::arg("path"));
  m.def("score_json", &score_json, py::arg("manifest"), py::arg("outputs"), py::arg("out_dir") = std::nullopt,
        py::arg("weights") = std::array<double, 3>{1.0, 1.0, 1.0});

  m.def("consistency", &consistency, py::arg("values"));
  m.def("token_stability", &token_stability, py::arg("outputs"));
  m.def("semantic_stability", &semantic_stability_vectors, py::arg("embeddings"));
  m.def(
      "path_metrics",
      [](std::optional<std::vector<std::pair<int, int>>> pred, const std::vector<std::pair<int, int>>& gt) {
        std::optional<std::vector<GridPoint>> p;
        if (pred) p = to_points(*pred);
        const PathEval e = path_metrics(p, to_points(gt));
        return py::dict(py::arg("EMA") = e.ema, py::arg("PM_IA") = e.pm_ia, py::arg("PM_SA") = e.pm_sa);
      },
      py::arg("pred"), py::arg("gt"));
  m.def("point_accuracy", &point_accuracy, py::arg("preds"), py::arg("gts"));
  m.def(
      "region_bias",
      [](const std::vector<double>& values, int grid) {
        const RegionBias r = region_bias(values, grid);
        return py::make_tuple(r.middle, r.surrounding);
      },
      py::arg("cell_values"), py::arg("grid"));
  m.def("remap_direction_label", &remap_direction_label, py::arg("label"), py::arg("rotation"));

  m.def("read_vmat", [](const std::filesystem::path& p) { return to_array(read_vmat(p)); }, py::arg("path"));
  m.def(
      "write_vmat", [](const FloatArray& a, const std::filesystem::path& p) { write_vmat(to_matrix(a), p); },
      py::arg("array"), py::arg("path"));
  m.def("read_vocab", &read_vocab, py::arg("path"));
  m.def("decode", &decode_py, py::arg("feature"), py::arg("embeddings"), py::arg("vocab"), py::arg("k") = 5);
  m.def(
      "alignment_gap",
      [](const FloatArray& h, const FloatArray& c) {
        const AlignmentGap g = alignment_gap(to_matrix(h), to_matrix(c));
        return py::make_tuple(g.matched, g.mismatched, g.gap);
      },
      py::arg("features"), py::arg("captions"));
  m.def(
      "cluster_stats",
      [](const FloatArray& x, const std::vector<std::string>& labels) {
        const ClusterStats s = cluster_stats(to_matrix(x), labels);
        return py::make_tuple(s.intra, s.inter, s.ratio);
      },
      py::arg("features"), py::arg("labels"));
  m.def(
      "principal_projection", [](const FloatArray& x) { return to_array(principal_projection(to_matrix(x))); },
      py::arg("features"));

  py::class_<Probe>(m, "Probe")
      .def_readonly("classes", &Probe::classes)
      .def_readonly("iterations", &Probe::iterations)
      .def_readonly("converged", &Probe::converged)
      .def_readonly("final_loss", &Probe::final_loss)
      .def(
          "predict",
          [](const Probe& p, const FloatArray& x) {
            std::vector<std::string> out;
            for (int c : probe_predict(p, to_matrix(x))) out.push_back(p.classes[static_cast<std::size_t>(c)]);
            return out;
          },
          py::arg("features"))
      .def(
          "accuracy",
          [](const Probe& p, const FloatArray& x, const std::vector<std::string>& labels) {
            return probe_accuracy(p, to_matrix(x), labels);
          },
          py::arg("features"), py::arg("labels"))
      .def("to_json", [](const Probe& p) { return probe_to_json(p).dump(); });
  m.def(
      "train_probe",
      [](const FloatArray& x, const std::vector<std::string>& labels, double lr, double l2, double tol,
         int max_iter) {
        const Matrix mx = to_matrix(x);
        py::gil_scoped_release release;
        return train_linear_probe(mx, labels, {lr, l2, tol, max_iter, 1});
      },
      py::arg("features"), py::arg("labels"), py::arg("lr") = 0.1, py::arg("l2") = 1e-4, py::arg("tol") = 1e-6,
      py::arg("max_iter") = 5000);
}
