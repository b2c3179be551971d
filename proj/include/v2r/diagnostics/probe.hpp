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

#include <string>
#include <vector>

#include <json.hpp>

#include "v2r/diagnostics/matrix.hpp"

namespace v2r {

struct ProbeHyper {
  double learning_rate = 0.1;  // halved whenever a step would raise the loss
  double l2 = 1e-4;            // on weights only
  double tolerance = 1e-6;     // gradient norm
  int max_iterations = 5000;
  unsigned threads = 1;        // gradient reduction is chunked, so results do not depend on this
};

// Multinomial logistic regression.
struct Probe {
  std::vector<std::string> classes;  // sorted; index = class id
  std::size_t dim = 0;
  std::vector<double> weights;       // classes x dim, row-major
  std::vector<double> bias;          // classes
  double final_loss = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct LossGradient {
  double loss = 0.0;          // mean cross-entropy + l2/2 * |W|^2
  std::vector<double> grad_w;
  std::vector<double> grad_b;
};

// Loss and analytic gradient at (W, b). `y` holds class ids in [0, classes).
LossGradient probe_loss_gradient(const Matrix& x, const std::vector<int>& y, std::size_t classes,
                                 const std::vector<double>& w, const std::vector<double>& b, double l2,
                                 unsigned threads = 1);

// Full-batch gradient descent from zero weights. Throws InvalidArgument for
// fewer than two classes or a label count different from rows(X).
Probe train_linear_probe(const Matrix& x, const std::vector<std::string>& labels,
                         const ProbeHyper& hyper = {});

// Argmax class per row; ties go to the lower class index.
std::vector<int> probe_predict(const Probe& probe, const Matrix& x);

// Fraction of rows predicted as their label; labels unknown to the probe
// count as wrong. Throws InvalidArgument on dimension mismatches.
double probe_accuracy(const Probe& probe, const Matrix& x, const std::vector<std::string>& labels);

nlohmann::ordered_json probe_to_json(const Probe& probe);
Probe probe_from_json(const nlohmann::json& j);

}  // namespace v2r
