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

#include "v2r/diagnostics/alignment.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <Eigen/Dense>

#include "v2r/core/csv.hpp"
#include "v2r/error.hpp"

namespace v2r {
namespace {

std::vector<double> unit_rows(const Matrix& m, const char* name) {
  std::vector<double> out(m.data.size());
  for (std::size_t r = 0; r < m.rows; ++r) {
    double n = 0.0;
    for (float v : m.row(r)) n += static_cast<double>(v) * v;
    if (n == 0.0) throw InvalidArgument(std::string("alignment: zero-norm row ") + std::to_string(r) + " in " + name);
    n = std::sqrt(n);
    for (std::size_t c = 0; c < m.cols; ++c) out[r * m.cols + c] = m.at(r, c) / n;
  }
  return out;
}

}  // namespace

AlignmentGap alignment_gap(const Matrix& h, const Matrix& c) {
  if (h.rows != c.rows || h.cols != c.cols) throw InvalidArgument("alignment: H and C shapes differ");
  if (h.rows == 0 || h.cols == 0) throw InvalidArgument("alignment: empty input");
  const std::size_t n = h.rows, d = h.cols;
  const auto hu = unit_rows(h, "H");
  const auto cu = unit_rows(c, "C");
  // sum_{i,j} h_i.c_j = (sum h_i).(sum c_j); remove the diagonal for i != j.
  std::vector<double> hs(d, 0.0), cs(d, 0.0);
  double diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      hs[k] += hu[i * d + k];
      cs[k] += cu[i * d + k];
      diag += hu[i * d + k] * cu[i * d + k];
    }
  }
  double total = 0.0;
  for (std::size_t k = 0; k < d; ++k) total += hs[k] * cs[k];
  AlignmentGap g;
  g.matched = diag / static_cast<double>(n);
  g.mismatched = n > 1 ? (total - diag) / (static_cast<double>(n) * static_cast<double>(n - 1)) : 0.0;
  g.gap = g.matched - g.mismatched;
  return g;
}

ClusterStats cluster_stats(const Matrix& x, const std::vector<std::string>& labels) {
  if (labels.size() != x.rows) throw InvalidArgument("cluster stats: label count does not match rows");
  if (std::set<std::string>(labels.begin(), labels.end()).size() < 2) {
    throw InvalidArgument("cluster stats: need at least two classes");
  }
  double intra = 0.0, inter = 0.0;
  std::size_t n_intra = 0, n_inter = 0;
  for (std::size_t i = 0; i < x.rows; ++i) {
    const auto a = x.row(i);
    for (std::size_t j = i + 1; j < x.rows; ++j) {
      const auto b = x.row(j);
      double s = 0.0;
      for (std::size_t k = 0; k < x.cols; ++k) {
        const double diff = static_cast<double>(a[k]) - b[k];
        s += diff * diff;
      }
      const double dist = std::sqrt(s);
      if (labels[i] == labels[j]) {
        intra += dist, ++n_intra;
      } else {
        inter += dist, ++n_inter;
      }
    }
  }
  ClusterStats st;
  st.intra = n_intra ? intra / static_cast<double>(n_intra) : 0.0;
  st.inter = n_inter ? inter / static_cast<double>(n_inter) : 0.0;
  st.ratio = st.inter > 0.0 ? st.intra / st.inter : 0.0;
  return st;
}

Matrix principal_projection(const Matrix& x) {
  Matrix out(x.rows, 2, 0.0f);
  if (x.rows == 0 || x.cols == 0) return out;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(x.rows), static_cast<Eigen::Index>(x.cols));
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < x.cols; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = x.at(r, c);
  }
  m.rowwise() -= m.colwise().mean();
  const Eigen::MatrixXd cov = m.transpose() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  // Eigenvalues ascend; the leading axes are the last columns.
  const Eigen::Index d = cov.rows();
  for (Eigen::Index a = 0; a < std::min<Eigen::Index>(2, d); ++a) {
    Eigen::VectorXd axis = solver.eigenvectors().col(d - 1 - a);
    Eigen::Index arg = 0;
    axis.cwiseAbs().maxCoeff(&arg);
    if (axis(arg) < 0) axis = -axis;
    const Eigen::VectorXd proj = m * axis;
    for (std::size_t r = 0; r < x.rows; ++r) {
      out.at(r, static_cast<std::size_t>(a)) = static_cast<float>(proj(static_cast<Eigen::Index>(r)));
    }
  }
  return out;
}

void write_projection_csv(const std::vector<std::string>& ids, const std::vector<std::string>& labels,
                          const Matrix& projection, const std::filesystem::path& path) {
  if (ids.size() != projection.rows || labels.size() != projection.rows || projection.cols != 2) {
    throw InvalidArgument("projection: ids, labels and rows disagree");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "id,label,pc1,pc2\n";
  for (std::size_t r = 0; r < projection.rows; ++r) {
    out << csv_row({ids[r], labels[r], format_number(projection.at(r, 0)), format_number(projection.at(r, 1))});
  }
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace v2r
