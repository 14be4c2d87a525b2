// Copyright 2026 The eduseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDUSEG_OPTIMIZE_HPP_
#define EDUSEG_OPTIMIZE_HPP_

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace eduseg {

struct LbfgsOptions {
  int max_iterations = 500;
  double tolerance = 1e-6;  // relative change of the objective
  int history = 10;
  double armijo = 1e-4;
  int max_backtracks = 50;
};

struct LbfgsResult {
  Eigen::VectorXd x;
  double value = 0.0;
  Eigen::VectorXd gradient;
  std::vector<double> trace;  // objective after every accepted iterate
  int iterations = 0;
  bool converged = false;
};

// Returns f(x) and writes its gradient into the second argument.
using ObjectiveFunction = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

// Limited-memory BFGS maximization with a backtracking Armijo line search.
// Every accepted step strictly increases f, so the trace is non-decreasing.
// Throws Error if f becomes non-finite.
LbfgsResult maximize_lbfgs(const ObjectiveFunction& f, Eigen::VectorXd x0,
                           const LbfgsOptions& options);

}  // namespace eduseg

#endif  // EDUSEG_OPTIMIZE_HPP_
