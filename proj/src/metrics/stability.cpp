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

#include "v2r/metrics/stability.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "v2r/core/hash.hpp"
#include "v2r/error.hpp"

namespace v2r {
namespace {

std::string who_of(const std::vector<std::string>* ids, std::size_t i) {
  return ids && i < ids->size() ? (*ids)[i] : "#" + std::to_string(i);
}

}  // namespace

double consistency(const std::vector<double>& values) {
  if (values.empty()) throw InvalidArgument("consistency: no values");
  // Deviations from the first value, so equal inputs give exactly 1.
  const double ref = values.front();
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("consistency: values must lie in [0, 1]");
    sum += v - ref;
  }
  const double n = static_cast<double>(values.size());
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - ref - mean) * (v - ref - mean);
  return 1.0 - std::sqrt(ss / n);
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c >= 0x80) {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> token_set(std::string_view text) {
  auto t = tokenize(text);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t i = 0, j = 0, inter = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++inter, ++i, ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double token_stability_sets(const std::vector<std::vector<std::string>>& sets) {
  if (sets.empty()) throw InvalidArgument("token stability: no outputs");
  const std::size_t n = sets.size();
  // Symmetric: off-diagonal pairs counted twice, self-pairs contribute 1.
  double off = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) off += jaccard(sets[i], sets[j]);
  }
  const double nn = static_cast<double>(n);
  return (2.0 * off + nn) / (nn * nn);
}

double token_stability(const std::vector<std::string>& outputs) {
  std::vector<std::vector<std::string>> sets;
  sets.reserve(outputs.size());
  for (const auto& o : outputs) sets.push_back(token_set(o));
  return token_stability_sets(sets);
}

HashedBowEmbedder::HashedBowEmbedder(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw InvalidArgument("embedder dimension must be positive");
}

std::vector<double> HashedBowEmbedder::embed(std::string_view text) const {
  std::vector<double> v(dim_, 0.0);
  auto tokens = tokenize(text);
  if (tokens.empty()) tokens.emplace_back("\x01empty");
  for (const auto& t : tokens) v[fnv1a64(t) % dim_] += 1.0;
  return v;
}

EndpointEmbedder::EndpointEmbedder(EndpointConfig config, std::optional<std::string> token)
    : model_(config.model),
      client_(std::make_unique<HttpChatClient>(std::move(config), std::move(token))) {}

std::vector<double> EndpointEmbedder::embed(std::string_view text) const {
  nlohmann::json body{{"model", model_}, {"input", std::string(text)}};
  nlohmann::json response;
  ChatResponse r = client_->post_json("/embeddings", body, &response);
  if (!r.ok) throw EndpointError("embedding request failed: " + r.error);
  try {
    return response.at("data").at(0).at("embedding").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw EndpointError(std::string("malformed embedding response: ") + e.what());
  }
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw InvalidArgument("cosine: dimension mismatch");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw InvalidArgument("cosine: zero vector");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

double semantic_stability_vectors(const std::vector<std::vector<double>>& embeddings) {
  if (embeddings.empty()) throw InvalidArgument("semantic stability: no outputs");
  const std::size_t d = embeddings[0].size();
  std::vector<double> sum(d, 0.0);
  for (const auto& e : embeddings) {
    if (e.size() != d) throw InvalidArgument("semantic stability: dimension mismatch");
    double norm = 0.0;
    for (double x : e) norm += x * x;
    if (norm == 0.0 || !std::isfinite(norm)) throw InvalidArgument("semantic stability: zero or non-finite vector");
    norm = std::sqrt(norm);
    for (std::size_t k = 0; k < d; ++k) sum[k] += e[k] / norm;
  }
  double sq = 0.0;
  for (double x : sum) sq += x * x;
  const double n = static_cast<double>(embeddings.size());
  return sq / (n * n);
}

double semantic_stability(const std::vector<std::string>& outputs, const Embedder& embedder,
                          const std::vector<std::string>* ids) {
  std::vector<std::vector<double>> vecs;
  vecs.reserve(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    try {
      vecs.push_back(embedder.embed(outputs[i]));
    } catch (const EndpointError& e) {
      throw EndpointError("embedding output " + who_of(ids, i) + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error("embedding output " + who_of(ids, i) + ": " + e.what());
    }
  }
  return semantic_stability_vectors(vecs);
}

}  // namespace v2r
