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

#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library and favour the literal definitions over speed.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// 1 - population standard deviation, accumulated in long double.
inline double consistency(const std::vector<double>& v) {
  long double mean = 0;
  for (double x : v) mean += x;
  mean /= static_cast<long double>(v.size());
  long double var = 0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= static_cast<long double>(v.size());
  return static_cast<double>(1.0L - std::sqrt(var));
}

inline long double cos_ld(const std::vector<double>& a, const std::vector<double>& b) {
  long double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<long double>(a[i]) * b[i];
    na += static_cast<long double>(a[i]) * a[i];
    nb += static_cast<long double>(b[i]) * b[i];
  }
  return dot / std::sqrt(na * nb);
}

// Mean cosine over all ordered pairs, self-pairs included.
inline double semantic_stability(const std::vector<std::vector<double>>& e) {
  long double s = 0;
  for (const auto& a : e)
    for (const auto& b : e) s += cos_ld(a, b);
  return static_cast<double>(s / static_cast<long double>(e.size() * e.size()));
}

inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::vector<std::string> i, u;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(i));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return static_cast<double>(i.size()) / static_cast<double>(u.size());
}

// Mean Jaccard over all ordered pairs, self-pairs included.
inline double token_stability(const std::vector<std::set<std::string>>& sets) {
  long double s = 0;
  for (const auto& a : sets)
    for (const auto& b : sets) s += jaccard(a, b);
  return static_cast<double>(s / static_cast<long double>(sets.size() * sets.size()));
}

using Pt = std::pair<int, int>;

struct PathScores {
  double ema, pm_ia, pm_sa;
};

// Missing prediction scores zero everywhere.
inline PathScores path_metrics(const std::vector<Pt>* pred, const std::vector<Pt>& gt) {
  if (!pred) return {0, 0, 0};
  int ia = 0, sa = 0;
  for (std::size_t i = 0; i < pred->size() && i < gt.size(); ++i) {
    if (std::find(gt.begin(), gt.end(), (*pred)[i]) != gt.end()) ++ia;
    if ((*pred)[i] == gt[i]) ++sa;
  }
  const bool exact = pred->size() == gt.size() && std::equal(gt.begin(), gt.end(), pred->begin());
  return {exact ? 1.0 : 0.0, ia / static_cast<double>(gt.size()), sa / static_cast<double>(gt.size())};
}

inline double point_accuracy(const std::vector<const std::vector<int>*>& pred,
                             const std::vector<std::vector<int>>& gt) {
  int hit = 0;
  for (std::size_t i = 0; i < gt.size(); ++i) hit += pred[i] && *pred[i] == gt[i];
  return hit / static_cast<double>(gt.size());
}

// Middle cells have centres inside the closed central third on both axes.
inline bool middle_cell(int row, int col, int grid) {
  auto inside = [grid](int i) {
    const double c = (i + 0.5) / grid;
    return c >= 1.0 / 3.0 && c <= 2.0 / 3.0;
  };
  return inside(row) && inside(col);
}

struct Region {
  double middle, surrounding;
};

inline Region region_bias(const std::vector<double>& values, int grid) {
  long double m = 0, s = 0;
  int nm = 0, ns = 0;
  for (int r = 0; r < grid; ++r) {
    for (int c = 0; c < grid; ++c) {
      const double v = values[static_cast<std::size_t>(r * grid + c)];
      if (std::isnan(v)) continue;
      if (middle_cell(r, c, grid)) {
        m += v, ++nm;
      } else {
        s += v, ++ns;
      }
    }
  }
  return {nm ? static_cast<double>(m / nm) : NAN, ns ? static_cast<double>(s / ns) : NAN};
}

using Rows = std::vector<std::vector<double>>;

struct Gap {
  double matched, mismatched, gap;
};

inline Gap alignment_gap(const Rows& h, const Rows& c) {
  const std::size_t n = h.size();
  long double m = 0, mm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m += cos_ld(h[i], c[j]);
      } else {
        mm += cos_ld(h[i], c[j]);
      }
    }
  }
  const double matched = static_cast<double>(m / n);
  const double mismatched = n > 1 ? static_cast<double>(mm / (n * (n - 1))) : 0.0;
  return {matched, mismatched, matched - mismatched};
}

struct Clusters {
  double intra, inter, ratio;
};

// Ordered pairs i != j; each unordered pair counted twice leaves means unchanged.
inline Clusters cluster_stats(const Rows& x, const std::vector<std::string>& labels) {
  long double in = 0, out = 0;
  long long nin = 0, nout = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      long double d = 0;
      for (std::size_t k = 0; k < x[i].size(); ++k) d += (x[i][k] - x[j][k]) * (x[i][k] - x[j][k]);
      if (labels[i] == labels[j]) {
        in += std::sqrt(d), ++nin;
      } else {
        out += std::sqrt(d), ++nout;
      }
    }
  }
  const double a = nin ? static_cast<double>(in / nin) : 0.0;
  const double b = nout ? static_cast<double>(out / nout) : 0.0;
  return {a, b, b > 0 ? a / b : 0.0};
}

// Indices sorted by descending logit, lower index first on ties, with
// softmax probabilities.
inline std::vector<std::pair<std::size_t, double>> decode(const std::vector<double>& h, const Rows& e,
                                                          std::size_t k) {
  std::vector<long double> logit(e.size());
  for (std::size_t r = 0; r < e.size(); ++r) {
    long double s = 0;
    for (std::size_t c = 0; c < h.size(); ++c) s += static_cast<long double>(e[r][c]) * h[c];
    logit[r] = s;
  }
  std::vector<std::size_t> idx(e.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return logit[a] > logit[b]; });
  const long double mx = logit[idx[0]];
  long double z = 0;
  for (long double l : logit) z += std::exp(l - mx);
  std::vector<std::pair<std::size_t, double>> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back({idx[i], static_cast<double>(std::exp(logit[idx[i]] - mx) / z)});
  return out;
}

// Clockwise turn in 45-degree steps over labels listed clockwise.
inline int direction_remap_index(int label_index, int rotation_deg) {
  return ((label_index + rotation_deg / 45) % 8 + 8) % 8;
}

}  // namespace oracle
