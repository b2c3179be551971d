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

// v2r command-line entry point.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "v2r/core/config.hpp"
#include "v2r/core/csv.hpp"
#include "v2r/core/hash.hpp"
#include "v2r/core/manifest.hpp"
#include "v2r/core/version.hpp"
#include "v2r/diagnostics/alignment.hpp"
#include "v2r/diagnostics/decode.hpp"
#include "v2r/diagnostics/matrix.hpp"
#include "v2r/diagnostics/probe.hpp"
#include "v2r/error.hpp"
#include "v2r/harness/eval.hpp"
#include "v2r/report/generate.hpp"
#include "v2r/report/score.hpp"

namespace {

using namespace v2r;
namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitEndpoint = 4;

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

nlohmann::json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

std::vector<Task> parse_tasks(const std::vector<std::string>& raw) {
  std::vector<Task> tasks;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) tasks.push_back(parse_task(name));
    }
  }
  return tasks;
}

Weights parse_weights(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      v.push_back(std::stod(part));
    } catch (const std::exception&) {
      throw InvalidArgument("--weights: '" + part + "' is not a number");
    }
  }
  if (v.size() != 3) throw InvalidArgument("--weights expects consistency,stability,judge");
  Weights w{v[0], v[1], v[2]};
  validate_weights(w);
  return w;
}

// gen ----------------------------------------------------------------------

struct GenArgs {
  std::vector<std::string> tasks;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid;
  std::string out = "out";
  std::string preset = "default";
  std::optional<int> per_config;
  std::string assets;
  std::string backgrounds;
  unsigned threads = 1;
};

int cmd_gen(const GenArgs& a) {
  GenerateOptions o;
  o.tasks = parse_tasks(a.tasks);
  if (o.tasks.empty()) throw InvalidArgument("--task: at least one task is required");
  if (!a.config.empty()) o.config = load_run_config(a.config);
  if (a.seed) o.config.master_seed = *a.seed;
  if (a.grid) o.config.grid = *a.grid;
  if (a.preset != "default") o.presets = presets_from_json(read_json_file(a.preset));
  if (a.per_config) {
    if (*a.per_config < 1) throw InvalidArgument("--per-config must be at least 1");
    o.presets.coordinate.per_config = *a.per_config;
    o.presets.path.per_config = *a.per_config;
    o.presets.text.per_config = *a.per_config;
  }
  if (!a.assets.empty()) o.asset_root = fs::path(a.assets);
  if (!a.backgrounds.empty()) o.background_root = fs::path(a.backgrounds);
  o.out_dir = a.out;
  o.threads = std::max(1u, a.threads);
  const GenerateSummary s = generate(o);
  std::size_t total = 0;
  for (const auto& [task, n] : s.counts) {
    std::cout << to_string(task) << ": " << n << " records\n";
    total += n;
  }
  if (s.skipped) std::cout << "skipped (object outside canvas): " << s.skipped << "\n";
  std::cout << "total: " << total << "\nmanifest: " << s.manifest.string() << "\n";
  return kExitOk;
}

// eval ---------------------------------------------------------------------

struct EvalArgs {
  std::string manifest;
  std::string out;
  std::string cache;
  EndpointConfig endpoint;
  double max_failure_rate = 0.1;
};

int cmd_eval(const EvalArgs& a) {
  if (a.max_failure_rate < 0 || a.max_failure_rate > 1) {
    throw InvalidArgument("--max-failure-rate must lie in [0, 1]");
  }
  const fs::path cache = a.cache.empty() ? fs::path(a.out).replace_extension(".cache.jsonl") : fs::path(a.cache);
  const EvalResult r = run_eval(a.manifest, a.endpoint, cache);
  write_outputs(r.outputs, a.out);
  const auto& s = r.summary;
  std::cout << "records: " << s.total << "\ncached: " << s.cached << "\nrequested: " << s.requested
            << "\nfailed: " << s.failed << "\nunparseable: " << s.unparseable << "\noutputs: " << a.out << "\n";
  const double rate = s.total ? static_cast<double>(s.failed) / static_cast<double>(s.total) : 0.0;
  if (rate > a.max_failure_rate) {
    std::cerr << "error: failure rate " << rate << " exceeds --max-failure-rate " << a.max_failure_rate << "\n";
    return kExitEndpoint;
  }
  return kExitOk;
}

// score --------------------------------------------------------------------

struct ScoreArgs {
  std::string manifest;
  std::string outputs;
  std::string out = "report";
  std::string config;
  std::string weights;
  std::string judge_model;
  std::string embed_model;
  std::string base_url = EndpointConfig{}.base_url;
  std::string token_env = EndpointConfig{}.token_env;
};

int cmd_score(const ScoreArgs& a) {
  ScoreOptions o;
  if (!a.config.empty()) o.weights = load_run_config(a.config).weights;
  if (!a.weights.empty()) o.weights = parse_weights(a.weights);
  validate_weights(o.weights);

  EndpointConfig ep;
  ep.base_url = a.base_url;
  ep.token_env = a.token_env;
  std::unique_ptr<HttpChatClient> judge;
  std::unique_ptr<EndpointEmbedder> embedder;
  if (!a.judge_model.empty()) {
    EndpointConfig jc = ep;
    jc.model = a.judge_model;
    validate(jc);
    judge = std::make_unique<HttpChatClient>(jc, resolve_token(jc));
    o.judge = judge.get();
  }
  if (!a.embed_model.empty()) {
    EndpointConfig ec = ep;
    ec.model = a.embed_model;
    validate(ec);
    embedder = std::make_unique<EndpointEmbedder>(ec, resolve_token(ec));
    o.embedder = embedder.get();
    o.embedder_name = "endpoint:" + a.embed_model;
  }

  const Manifest manifest = read_manifest(a.manifest);
  const auto outputs = read_outputs(a.outputs, manifest);
  ReportBundle b = score_outputs(manifest, outputs, o);
  b.report["meta"]["manifest_sha256"] = sha256_file(a.manifest);
  b.report["meta"]["outputs_sha256"] = sha256_file(a.outputs);
  write_report_bundle(b, a.out);
  for (const auto& [task, t] : b.report["tasks"].items()) {
    std::cout << task << ": accuracy " << format_number(t["accuracy"].is_null() ? NAN : t["accuracy"].get<double>());
    if (t.contains("robustness")) std::cout << ", aggregate " << format_number(t["robustness"]["aggregate"].get<double>());
    std::cout << "\n";
  }
  std::cout << "report: " << (fs::path(a.out) / "report.json").string() << "\n";
  return kExitOk;
}

// decode -------------------------------------------------------------------

struct DecodeArgs {
  std::string features;
  std::string embeddings;
  std::string vocab;
  std::size_t k = 5;
  std::string out = "decode.csv";
};

int cmd_decode(const DecodeArgs& a) {
  const Matrix h = read_vmat(a.features);
  const Matrix e = read_vmat(a.embeddings);
  const auto vocab = read_vocab(a.vocab);
  std::string csv = "feature,rank,index,token,prob\n";
  for (std::size_t r = 0; r < h.rows; ++r) {
    const auto top = decode_feature(h.row(r), e, vocab, a.k);
    for (std::size_t i = 0; i < top.size(); ++i) {
      csv += csv_row({std::to_string(r), std::to_string(i + 1), std::to_string(top[i].index), top[i].token,
                      format_number(top[i].probability)});
    }
  }
  write_text(a.out, csv);
  std::cout << "features: " << h.rows << "\nk: " << a.k << "\nout: " << a.out << "\n";
  return kExitOk;
}

// probe --------------------------------------------------------------------

struct ProbeArgs {
  std::string train_x;
  std::string train_labels;
  std::string test_x;
  std::string test_labels;
  std::string out = "probe.json";
  ProbeHyper hyper;
};

int cmd_probe(const ProbeArgs& a) {
  if (a.test_x.empty() != a.test_labels.empty()) {
    throw InvalidArgument("--test-x and --test-labels must be given together");
  }
  const Matrix x = read_vmat(a.train_x);
  const auto y = read_lines_file(a.train_labels);
  const Probe p = train_linear_probe(x, y, a.hyper);
  ojson j;
  j["train_accuracy"] = probe_accuracy(p, x, y);
  std::cout << "train accuracy: " << format_number(j["train_accuracy"].get<double>()) << "\n";
  if (!a.test_x.empty()) {
    const Matrix tx = read_vmat(a.test_x);
    const auto ty = read_lines_file(a.test_labels);
    j["test_accuracy"] = probe_accuracy(p, tx, ty);
    std::cout << "test accuracy: " << format_number(j["test_accuracy"].get<double>()) << "\n";
  }
  j["probe"] = probe_to_json(p);
  write_text(a.out, j.dump(2) + "\n");
  std::cout << "iterations: " << p.iterations << (p.converged ? " (converged)" : "") << "\nout: " << a.out << "\n";
  return kExitOk;
}

// alignment ----------------------------------------------------------------

struct AlignmentArgs {
  std::string h;
  std::string c;
  std::string labels;
  std::string ids;
  std::string out = "alignment";
};

int cmd_alignment(const AlignmentArgs& a) {
  const Matrix h = read_vmat(a.h);
  const Matrix c = read_vmat(a.c);
  const AlignmentGap g = alignment_gap(h, c);
  ojson j;
  j["rows"] = h.rows;
  j["matched"] = g.matched;
  j["mismatched"] = g.mismatched;
  j["gap"] = g.gap;
  const fs::path out(a.out);
  if (!a.labels.empty()) {
    const auto labels = read_lines_file(a.labels);
    std::vector<std::string> ids;
    if (a.ids.empty()) {
      for (std::size_t i = 0; i < h.rows; ++i) ids.push_back(std::to_string(i));
    } else {
      ids = read_lines_file(a.ids);
    }
    if (ids.size() != h.rows) throw InvalidArgument("--ids: expected " + std::to_string(h.rows) + " lines");
    const ClusterStats cs = cluster_stats(h, labels);
    j["clusters"] = {{"intra", cs.intra}, {"inter", cs.inter}, {"ratio", cs.ratio}};
    fs::create_directories(out);
    write_projection_csv(ids, labels, principal_projection(h), out / "projection.csv");
  }
  write_text(out / "alignment.json", j.dump(2) + "\n");
  std::cout << "matched: " << format_number(g.matched) << "\nmismatched: " << format_number(g.mismatched)
            << "\ngap: " << format_number(g.gap) << "\nout: " << out.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Visual variation robustness harness"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  int code = kExitOk;

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate images and a manifest");
  gen->add_option("--task", ga.tasks, "Task name(s); repeat or comma-separate")->required();
  gen->add_option("--config", ga.config, "Run config JSON");
  gen->add_option("--seed", ga.seed, "Master seed");
  gen->add_option("--grid", ga.grid, "Position grid size");
  gen->add_option("--out", ga.out, "Output directory")->capture_default_str();
  gen->add_option("--preset", ga.preset, "'default' or a presets JSON file")->capture_default_str();
  gen->add_option("--per-config", ga.per_config, "Samples per campaign configuration");
  gen->add_option("--assets", ga.assets, "Asset bank root")->check(CLI::ExistingDirectory);
  gen->add_option("--backgrounds", ga.backgrounds, "Background image root")->check(CLI::ExistingDirectory);
  gen->add_option("--threads", ga.threads, "Render threads")->capture_default_str();
  gen->callback([&] { code = cmd_gen(ga); });

  EvalArgs ea;
  auto* ev = app.add_subcommand("eval", "Query a chat-completions endpoint for every record");
  ev->add_option("--manifest", ea.manifest, "Manifest JSONL")->required();
  ev->add_option("--out", ea.out, "Outputs JSONL")->required();
  ev->add_option("--cache", ea.cache, "Response cache JSONL (default: <out>.cache.jsonl)");
  ev->add_option("--base-url", ea.endpoint.base_url, "Endpoint base URL")->capture_default_str();
  ev->add_option("--model", ea.endpoint.model, "Model id")->required();
  ev->add_option("--token-env", ea.endpoint.token_env, "Env var holding the bearer token; empty for none")
      ->capture_default_str();
  ev->add_option("--in-flight", ea.endpoint.max_in_flight, "Concurrent requests")->capture_default_str();
  ev->add_option("--max-attempts", ea.endpoint.retry.max_attempts, "Attempts per request")->capture_default_str();
  ev->add_option("--backoff-ms", ea.endpoint.retry.backoff_base_ms, "Base retry backoff")->capture_default_str();
  ev->add_option("--timeout-s", ea.endpoint.timeout_s, "Per-request timeout")->capture_default_str();
  ev->add_option("--temperature", ea.endpoint.temperature, "Sampling temperature")->capture_default_str();
  ev->add_option("--max-tokens", ea.endpoint.max_tokens, "Completion token limit; 0 for server default");
  ev->add_option("--max-failure-rate", ea.max_failure_rate, "Exit 4 when the failed fraction exceeds this")
      ->capture_default_str();
  ev->callback([&] { code = cmd_eval(ea); });

  ScoreArgs sa;
  auto* sc = app.add_subcommand("score", "Score outputs and write the report bundle");
  sc->add_option("--manifest", sa.manifest, "Manifest JSONL")->required();
  sc->add_option("--outputs", sa.outputs, "Outputs JSONL")->required();
  sc->add_option("--out", sa.out, "Report directory")->capture_default_str();
  sc->add_option("--config", sa.config, "Run config JSON (weights)");
  sc->add_option("--weights", sa.weights, "consistency,stability,judge");
  sc->add_option("--judge-model", sa.judge_model, "Enable the judge component with this model");
  sc->add_option("--embed-model", sa.embed_model, "Use endpoint embeddings for semantic stability");
  sc->add_option("--base-url", sa.base_url, "Endpoint base URL for judge/embeddings")->capture_default_str();
  sc->add_option("--token-env", sa.token_env, "Env var holding the bearer token")->capture_default_str();
  sc->callback([&] { code = cmd_score(sa); });

  DecodeArgs da;
  auto* dc = app.add_subcommand("decode", "Top-k vocabulary tokens for each feature row");
  dc->add_option("--features", da.features, "Feature VMAT (one row per token)")->required();
  dc->add_option("--embeddings", da.embeddings, "Embedding VMAT (vocab x dim)")->required();
  dc->add_option("--vocab", da.vocab, "Vocabulary, one token per line")->required();
  dc->add_option("-k,--top-k", da.k, "Tokens per feature")->capture_default_str();
  dc->add_option("--out", da.out, "CSV output")->capture_default_str();
  dc->callback([&] { code = cmd_decode(da); });

  ProbeArgs pa;
  auto* pr = app.add_subcommand("probe", "Train a linear probe on feature rows");
  pr->add_option("--train-x", pa.train_x, "Training VMAT")->required();
  pr->add_option("--train-labels", pa.train_labels, "Training labels")->required();
  pr->add_option("--test-x", pa.test_x, "Test VMAT");
  pr->add_option("--test-labels", pa.test_labels, "Test labels");
  pr->add_option("--out", pa.out, "Probe JSON")->capture_default_str();
  pr->add_option("--lr", pa.hyper.learning_rate, "Initial learning rate")->capture_default_str();
  pr->add_option("--l2", pa.hyper.l2, "Weight decay")->capture_default_str();
  pr->add_option("--tol", pa.hyper.tolerance, "Gradient-norm tolerance")->capture_default_str();
  pr->add_option("--max-iter", pa.hyper.max_iterations, "Iteration cap")->capture_default_str();
  pr->add_option("--threads", pa.hyper.threads, "Gradient threads")->capture_default_str();
  pr->callback([&] { code = cmd_probe(pa); });

  AlignmentArgs aa;
  auto* al = app.add_subcommand("alignment", "Feature/caption alignment gap and cluster statistics");
  al->add_option("--features", aa.h, "Visual feature VMAT")->required();
  al->add_option("--captions", aa.c, "Caption embedding VMAT")->required();
  al->add_option("--labels", aa.labels, "Row labels for cluster stats and projection");
  al->add_option("--ids", aa.ids, "Row ids for the projection CSV");
  al->add_option("--out", aa.out, "Output directory")->capture_default_str();
  al->callback([&] { code = cmd_alignment(aa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const EndpointError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEndpoint;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
