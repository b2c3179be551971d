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

#include "v2r/diagnostics/probe.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "v2r/error.hpp"

namespace v2r {
namespace {

constexpr std::size_t kChunkRows = 128;

double squared_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

// Cross-entropy sum and unscaled gradient over rows [begin, end).
void accumulate(const Matrix& x, const std::vector<int>& y, std::size_t k, const std::vector<double>& w,
                const std::vector<double>& b, std::size_t begin, std::size_t end, double& loss,
                std::vector<double>& gw, std::vector<double>& gb) {
  const std::size_t d = x.cols;
  std::vector<double> z(k);
  for (std::size_t i = begin; i < end; ++i) {
    const auto row = x.row(i);
    for (std::size_t c = 0; c < k; ++c) {
      double s = b[c];
      const double* wc = &w[c * d];
      for (std::size_t j = 0; j < d; ++j) s += wc[j] * row[j];
      z[c] = s;
    }
    const double mx = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double& v : z) sum += v = std::exp(v - mx);
    const auto yi = static_cast<std::size_t>(y[i]);
    loss -= std::log(z[yi] / sum);
    for (std::size_t c = 0; c < k; ++c) {
      const double delta = z[c] / sum - (c == yi ? 1.0 : 0.0);
      gb[c] += delta;
      double* gwc = &gw[c * d];
      for (std::size_t j = 0; j < d; ++j) gwc[j] += delta * row[j];
    }
  }
}

}  // namespace

LossGradient probe_loss_gradient(const Matrix& x, const std::vector<int>& y, std::size_t k,
                                 const std::vector<double>& w, const std::vector<double>& b, double l2,
                                 unsigned threads) {
  const std::size_t n = x.rows, d = x.cols;
  if (y.size() != n) throw InvalidArgument("probe: label count does not match rows");
  if (w.size() != k * d || b.size() != k) throw InvalidArgument("probe: parameter shape mismatch");
  if (n == 0) throw InvalidArgument("probe: no samples");

  // Fixed chunks summed in chunk order keep the result independent of the
  // thread count.
  const std::size_t chunks = (n + kChunkRows - 1) / kChunkRows;
  std::vector<double> losses(chunks, 0.0);
  std::vector<std::vector<double>> gws(chunks, std::vector<double>(k * d, 0.0));
  std::vector<std::vector<double>> gbs(chunks, std::vector<double>(k, 0.0));
  auto run = [&](std::size_t first, std::size_t step) {
    for (std::size_t c = first; c < chunks; c += step) {
      accumulate(x, y, k, w, b, c * kChunkRows, std::min(n, (c + 1) * kChunkRows), losses[c], gws[c], gbs[c]);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, chunks));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run, t, workers);
  run(0, workers);
  for (auto& t : pool) t.join();

  LossGradient out;
  out.grad_w.assign(k * d, 0.0);
  out.grad_b.assign(k, 0.0);
  double loss = 0.0;
  for (std::size_t c = 0; c < chunks; ++c) {
    loss += losses[c];
    for (std::size_t i = 0; i < k * d; ++i) out.grad_w[i] += gws[c][i];
    for (std::size_t i = 0; i < k; ++i) out.grad_b[i] += gbs[c][i];
  }
  const double inv = 1.0 / static_cast<double>(n);
  out.loss = loss * inv + 0.5 * l2 * squared_norm(w);
  for (std::size_t i = 0; i < k * d; ++i) out.grad_w[i] = out.grad_w[i] * inv + l2 * w[i];
  for (double& g : out.grad_b) g *= inv;
  return out;
}

Probe train_linear_probe(const Matrix& x, const std::vector<std::string>& labels, const ProbeHyper& hyper) {
  if (labels.size() != x.rows) {
    throw InvalidArgument("probe: " + std::to_string(labels.size()) + " labels for " + std::to_string(x.rows) +
                          " rows");
  }
  if (hyper.learning_rate <= 0 || hyper.l2 < 0 || hyper.max_iterations < 0) {
    throw InvalidArgument("probe: invalid hyperparameters");
  }
  Probe p;
  p.classes = labels;
  std::sort(p.classes.begin(), p.classes.end());
  p.classes.erase(std::unique(p.classes.begin(), p.classes.end()), p.classes.end());
  if (p.classes.size() < 2) throw InvalidArgument("probe: need at least two classes");
  std::map<std::string, int> id;
  for (std::size_t c = 0; c < p.classes.size(); ++c) id[p.classes[c]] = static_cast<int>(c);
  std::vector<int> y;
  y.reserve(labels.size());
  for (const auto& l : labels) y.push_back(id[l]);

  const std::size_t k = p.classes.size();
  p.dim = x.cols;
  p.weights.assign(k * p.dim, 0.0);
  p.bias.assign(k, 0.0);
  LossGradient cur = probe_loss_gradient(x, y, k, p.weights, p.bias, hyper.l2, hyper.threads);
  double lr = hyper.learning_rate;
  std::vector<double> w2, b2;
  while (p.iterations < hyper.max_iterations) {
    p.grad_norm = std::sqrt(squared_norm(cur.grad_w) + squared_norm(cur.grad_b));
    if (p.grad_norm < hyper.tolerance) {
      p.converged = true;
      break;
    }
    w2 = p.weights;
    b2 = p.bias;
    for (std::size_t i = 0; i < w2.size(); ++i) w2[i] -= lr * cur.grad_w[i];
    for (std::size_t i = 0; i < k; ++i) b2[i] -= lr * cur.grad_b[i];
    LossGradient next = probe_loss_gradient(x, y, k, w2, b2, hyper.l2, hyper.threads);
    ++p.iterations;
    if (next.loss > cur.loss) {
      lr *= 0.5;
      if (lr < 1e-12) break;
      continue;
    }
    p.weights.swap(w2);
    p.bias.swap(b2);
    cur = std::move(next);
  }
  p.grad_norm = std::sqrt(squared_norm(cur.grad_w) + squared_norm(cur.grad_b));
  p.converged = p.converged || p.grad_norm < hyper.tolerance;
  p.final_loss = cur.loss;
  return p;
}

std::vector<int> probe_predict(const Probe& p, const Matrix& x) {
  if (x.cols != p.dim) throw InvalidArgument("probe: feature width does not match the probe");
  const std::size_t k = p.classes.size();
  if (p.weights.size() != k * p.dim || p.bias.size() != k) throw InvalidArgument("probe: malformed probe");
  std::vector<int> out(x.rows, 0);
  for (std::size_t i = 0; i < x.rows; ++i) {
    const auto row = x.row(i);
    double best = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      double s = p.bias[c];
      for (std::size_t j = 0; j < p.dim; ++j) s += p.weights[c * p.dim + j] * row[j];
      if (c == 0 || s > best) {
        best = s;
        out[i] = static_cast<int>(c);
      }
    }
  }
  return out;
}

double probe_accuracy(const Probe& p, const Matrix& x, const std::vector<std::string>& labels) {
  if (labels.size() != x.rows) throw InvalidArgument("probe: label count does not match rows");
  if (x.rows == 0) throw InvalidArgument("probe: no samples");
  const auto pred = probe_predict(p, x);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) hits += p.classes[static_cast<std::size_t>(pred[i])] == labels[i];
  return static_cast<double>(hits) / static_cast<double>(x.rows);
}

nlohmann::ordered_json probe_to_json(const Probe& p) {
  nlohmann::ordered_json j;
  j["classes"] = p.classes;
  j["dim"] = p.dim;
  j["weights"] = p.weights;
  j["bias"] = p.bias;
  j["final_loss"] = p.final_loss;
  j["grad_norm"] = p.grad_norm;
  j["iterations"] = p.iterations;
  j["converged"] = p.converged;
  return j;
}

Probe probe_from_json(const nlohmann::json& j) {
  Probe p;
  try {
    p.classes = j.at("classes").get<std::vector<std::string>>();
    p.dim = j.at("dim").get<std::size_t>();
    p.weights = j.at("weights").get<std::vector<double>>();
    p.bias = j.at("bias").get<std::vector<double>>();
    p.final_loss = j.value("final_loss", 0.0);
    p.grad_norm = j.value("grad_norm", 0.0);
    p.iterations = j.value("iterations", 0);
    p.converged = j.value("converged", false);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("probe: ") + e.what());
  }
  if (p.weights.size() != p.classes.size() * p.dim || p.bias.size() != p.classes.size()) {
    throw FormatError("probe: parameter shapes do not match classes and dim");
  }
  return p;
}

}  // namespace v2r
