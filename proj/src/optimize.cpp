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

#include "eduseg/optimize.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "eduseg/errors.hpp"

namespace eduseg {
namespace {

struct CurvaturePair {
  Eigen::VectorXd s;
  Eigen::VectorXd y;  // gradient decrease, so s.dot(y) > 0 for concave f
  double rho = 0.0;
};

// H * gradient from the stored pairs (two-loop recursion).
Eigen::VectorXd ascent_direction(const std::deque<CurvaturePair>& history,
                                 const Eigen::VectorXd& gradient) {
  Eigen::VectorXd q = gradient;
  std::vector<double> alpha(history.size());
  for (std::size_t k = history.size(); k-- > 0;) {
    alpha[k] = history[k].rho * history[k].s.dot(q);
    q -= alpha[k] * history[k].y;
  }
  if (!history.empty()) {
    const auto& last = history.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
  }
  for (std::size_t k = 0; k < history.size(); ++k) {
    const double beta = history[k].rho * history[k].y.dot(q);
    q += (alpha[k] - beta) * history[k].s;
  }
  return q;
}

}  // namespace

LbfgsResult maximize_lbfgs(const ObjectiveFunction& f, Eigen::VectorXd x0,
                           const LbfgsOptions& options) {
  LbfgsResult result;
  result.x = std::move(x0);
  result.gradient.resize(result.x.size());
  result.value = f(result.x, result.gradient);
  if (!std::isfinite(result.value)) throw Error("non-finite objective at iteration 0");
  result.trace.push_back(result.value);

  std::deque<CurvaturePair> history;
  Eigen::VectorXd candidate(result.x.size());
  Eigen::VectorXd candidate_gradient(result.x.size());

  while (result.iterations < options.max_iterations) {
    if (result.gradient.size() == 0 || result.gradient.cwiseAbs().maxCoeff() < 1e-12) {
      result.converged = true;
      break;
    }
    Eigen::VectorXd direction = ascent_direction(history, result.gradient);
    double slope = result.gradient.dot(direction);
    if (!(slope > 0.0)) {
      history.clear();
      direction = result.gradient;
      slope = direction.squaredNorm();
    }
    double step = history.empty() ? std::min(1.0, 1.0 / result.gradient.norm()) : 1.0;

    bool accepted = false;
    double value = 0.0;
    for (int k = 0; k < options.max_backtracks; ++k, step *= 0.5) {
      candidate = result.x + step * direction;
      value = f(candidate, candidate_gradient);
      if (std::isfinite(value) && value >= result.value + options.armijo * step * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // No ascent step left at machine precision.
      result.converged = true;
      break;
    }
    if (!std::isfinite(value)) {
      throw Error("non-finite objective at iteration " + std::to_string(result.iterations + 1));
    }

    CurvaturePair pair{candidate - result.x, result.gradient - candidate_gradient, 0.0};
    const double sy = pair.s.dot(pair.y);
    if (sy > 1e-12) {
      pair.rho = 1.0 / sy;
      history.push_back(std::move(pair));
      if (static_cast<int>(history.size()) > options.history) history.pop_front();
    }

    const double change = (value - result.value) / std::max(1.0, std::abs(result.value));
    result.x.swap(candidate);
    result.gradient.swap(candidate_gradient);
    result.value = value;
    result.trace.push_back(value);
    ++result.iterations;
    if (change < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace eduseg
