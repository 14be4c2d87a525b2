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

// Four-way maximum-entropy (multinomial log-linear) classifier over sparse
// indicator features.
//
//   P(b | t) = exp(s_b - logsumexp(s)),  s_b = sum_{i active in t} w(i, b)
//
// Training maximizes the L2-regularized conditional log-likelihood
//
//   L(w) = sum_j log P(b_j | t_j) - |w|^2 / (2 sigma2).

#ifndef EDUSEG_MAXENT_HPP_
#define EDUSEG_MAXENT_HPP_

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "eduseg/corpus.hpp"
#include "eduseg/errors.hpp"
#include "eduseg/features.hpp"

namespace eduseg {

// Row i holds the weights of feature i for labels [Begin, End, BeginEnd, Inside].
template <typename Scalar>
using WeightMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, static_cast<int>(kNumLabels),
                                   Eigen::RowMajor>;
template <typename Scalar>
using LabelVector = Eigen::Matrix<Scalar, static_cast<int>(kNumLabels), 1>;

using Distribution = LabelVector<double>;

struct LabeledInstance {
  FeatureVector vector;
  BoundaryLabel label = BoundaryLabel::Inside;
};

// Compressed row storage of labeled sparse instances.
class Dataset {
 public:
  Dataset() = default;
  static Dataset from_instances(std::span<const LabeledInstance> instances);

  void add(std::span<const FeatureId> ids, BoundaryLabel label);
  void add(const FeatureVector& vector, BoundaryLabel label) { add(vector.ids, label); }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::span<const FeatureId> ids(std::size_t i) const {
    return {ids_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  BoundaryLabel label(std::size_t i) const { return labels_[i]; }
  std::array<std::size_t, kNumLabels> label_counts() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<FeatureId> ids_;
  std::vector<BoundaryLabel> labels_;
};

struct TrainConfig {
  double l2_sigma2 = 1.0;
  int max_iterations = 500;
  double tolerance = 1e-6;

  void validate() const;
};

template <typename Scalar>
LabelVector<Scalar> label_scores(const WeightMatrix<Scalar>& weights,
                                 std::span<const FeatureId> ids) {
  LabelVector<Scalar> scores = LabelVector<Scalar>::Zero();
  for (FeatureId id : ids) {
    if (id < 0 || id >= weights.rows()) {
      throw ContractError("feature id " + std::to_string(id) + " out of range for " +
                          std::to_string(weights.rows()) + " model features");
    }
    scores += weights.row(id).transpose();
  }
  return scores;
}

template <typename Scalar>
Scalar log_sum_exp(const LabelVector<Scalar>& scores) {
  using std::exp;
  using std::log;
  const Scalar top = scores.maxCoeff();
  return top + log((scores.array() - top).exp().sum());
}

template <typename Scalar>
LabelVector<Scalar> softmax(const LabelVector<Scalar>& scores) {
  const Scalar lse = log_sum_exp(scores);
  return (scores.array() - lse).exp().matrix();
}

// Regularized log-likelihood; writes the gradient when `gradient` is non-null.
template <typename Scalar>
Scalar log_likelihood_objective(const WeightMatrix<Scalar>& weights, const Dataset& data,
                                Scalar l2_sigma2, WeightMatrix<Scalar>* gradient) {
  if (gradient != nullptr) gradient->setZero(weights.rows(), weights.cols());
  Scalar log_likelihood(0);
  for (std::size_t j = 0; j < data.size(); ++j) {
    const auto ids = data.ids(j);
    const auto gold = static_cast<Eigen::Index>(label_index(data.label(j)));
    const LabelVector<Scalar> scores = label_scores(weights, ids);
    const Scalar lse = log_sum_exp(scores);
    log_likelihood += scores(gold) - lse;
    if (gradient != nullptr) {
      LabelVector<Scalar> residual = -(scores.array() - lse).exp().matrix();
      residual(gold) += Scalar(1);
      for (FeatureId id : ids) gradient->row(id) += residual.transpose();
    }
  }
  if (gradient != nullptr) *gradient -= weights / l2_sigma2;
  return log_likelihood - weights.squaredNorm() / (Scalar(2) * l2_sigma2);
}

class MaxEntModel {
 public:
  MaxEntModel() = default;
  // Throws ContractError unless weights has one row per feature and is finite.
  MaxEntModel(FeatureSpace space, WeightMatrix<double> weights);
  static MaxEntModel zeros(FeatureSpace space);

  const FeatureSpace& space() const { return space_; }
  const WeightMatrix<double>& weights() const { return weights_; }
  std::size_t num_features() const { return static_cast<std::size_t>(weights_.rows()); }

  Distribution predict_proba(std::span<const FeatureId> ids) const;
  Distribution predict_proba(const FeatureVector& vector) const {
    return predict_proba(vector.ids);
  }
  BoundaryLabel decode(std::span<const FeatureId> ids) const;
  BoundaryLabel decode(const FeatureVector& vector) const { return decode(vector.ids); }

 private:
  FeatureSpace space_;
  WeightMatrix<double> weights_ = WeightMatrix<double>::Zero(0, kNumLabels);
};

// Argmax; ties go to the earliest label in [Begin, End, BeginEnd, Inside].
BoundaryLabel argmax_label(const Distribution& distribution);

struct Objective {
  double value = 0.0;
  WeightMatrix<double> gradient;
};

Objective objective_and_gradient(const MaxEntModel& model, const Dataset& data,
                                 const TrainConfig& config);

struct TrainResult {
  MaxEntModel model;
  std::vector<double> objective_trace;  // trace[0] is the objective at w = 0
  int iterations = 0;
  double gradient_max_norm = 0.0;
  bool converged = false;
};

// Starts from w = 0 and runs L-BFGS ascent until the relative objective
// change drops below the tolerance or max_iterations is reached.
TrainResult train(const Dataset& data, FeatureSpace space, const TrainConfig& config);

// Text format: "edu-seg-model v1", "labels B E BE I", "features <m>", then
// per feature its name line and a line of four tab-separated weights.
void save_model(std::ostream& out, const MaxEntModel& model);
MaxEntModel load_model(std::istream& in, const std::string& source = "<model>");
void save_model_file(const std::string& path, const MaxEntModel& model);
MaxEntModel load_model_file(const std::string& path);

}  // namespace eduseg

#endif  // EDUSEG_MAXENT_HPP_
