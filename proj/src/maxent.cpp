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

#include "eduseg/maxent.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "eduseg/optimize.hpp"

namespace eduseg {
namespace {

constexpr std::string_view kMagic = "edu-seg-model v1";
constexpr std::string_view kLabelsLine = "labels B E BE I";

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

}  // namespace

Dataset Dataset::from_instances(std::span<const LabeledInstance> instances) {
  Dataset data;
  for (const auto& instance : instances) data.add(instance.vector, instance.label);
  return data;
}

void Dataset::add(std::span<const FeatureId> ids, BoundaryLabel label) {
  ids_.insert(ids_.end(), ids.begin(), ids.end());
  offsets_.push_back(ids_.size());
  labels_.push_back(label);
}

std::array<std::size_t, kNumLabels> Dataset::label_counts() const {
  std::array<std::size_t, kNumLabels> counts{};
  for (BoundaryLabel label : labels_) ++counts[label_index(label)];
  return counts;
}

void TrainConfig::validate() const {
  if (!(l2_sigma2 > 0.0) || !std::isfinite(l2_sigma2)) {
    throw ContractError("l2 prior variance must be positive");
  }
  if (!(tolerance > 0.0)) throw ContractError("tolerance must be positive");
  if (max_iterations < 0) throw ContractError("max iterations must be non-negative");
}

MaxEntModel::MaxEntModel(FeatureSpace space, WeightMatrix<double> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (static_cast<std::size_t>(weights_.rows()) != space_.size()) {
    throw ContractError("weight rows (" + std::to_string(weights_.rows()) +
                        ") do not match feature count (" + std::to_string(space_.size()) + ")");
  }
  if (!weights_.allFinite()) throw ContractError("model weights must be finite");
  space_.freeze();
}

MaxEntModel MaxEntModel::zeros(FeatureSpace space) {
  const auto rows = static_cast<Eigen::Index>(space.size());
  return MaxEntModel(std::move(space), WeightMatrix<double>::Zero(rows, kNumLabels));
}

Distribution MaxEntModel::predict_proba(std::span<const FeatureId> ids) const {
  return softmax<double>(label_scores<double>(weights_, ids));
}

BoundaryLabel MaxEntModel::decode(std::span<const FeatureId> ids) const {
  return argmax_label(predict_proba(ids));
}

BoundaryLabel argmax_label(const Distribution& distribution) {
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < distribution.size(); ++k) {
    if (distribution(k) > distribution(best)) best = k;
  }
  return kAllLabels[static_cast<std::size_t>(best)];
}

Objective objective_and_gradient(const MaxEntModel& model, const Dataset& data,
                                 const TrainConfig& config) {
  config.validate();
  if (data.empty()) throw ContractError("objective needs at least one instance");
  Objective out;
  out.value = log_likelihood_objective<double>(model.weights(), data, config.l2_sigma2,
                                               &out.gradient);
  return out;
}

TrainResult train(const Dataset& data, FeatureSpace space, const TrainConfig& config) {
  config.validate();
  if (data.empty()) throw ContractError("cannot train on an empty dataset");
  space.freeze();
  const auto rows = static_cast<Eigen::Index>(space.size());
  const auto cols = static_cast<Eigen::Index>(kNumLabels);

  WeightMatrix<double> weights(rows, cols);
  WeightMatrix<double> gradient(rows, cols);
  const ObjectiveFunction objective = [&](const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
    weights = Eigen::Map<const WeightMatrix<double>>(x.data(), rows, cols);
    const double value = log_likelihood_objective<double>(weights, data, config.l2_sigma2, &gradient);
    grad = Eigen::Map<const Eigen::VectorXd>(gradient.data(), gradient.size());
    return value;
  };

  LbfgsOptions options;
  options.max_iterations = config.max_iterations;
  options.tolerance = config.tolerance;
  LbfgsResult fit = maximize_lbfgs(objective, Eigen::VectorXd::Zero(rows * cols), options);

  TrainResult result;
  result.model = MaxEntModel(std::move(space),
                             Eigen::Map<const WeightMatrix<double>>(fit.x.data(), rows, cols));
  result.objective_trace = std::move(fit.trace);
  result.iterations = fit.iterations;
  result.gradient_max_norm = fit.gradient.size() == 0 ? 0.0 : fit.gradient.cwiseAbs().maxCoeff();
  result.converged = fit.converged;
  return result;
}

void save_model(std::ostream& out, const MaxEntModel& model) {
  out << kMagic << '\n' << kLabelsLine << '\n' << "features " << model.num_features() << '\n';
  const auto& weights = model.weights();
  for (Eigen::Index i = 0; i < weights.rows(); ++i) {
    out << model.space().name(static_cast<FeatureId>(i)) << '\n';
    for (Eigen::Index b = 0; b < weights.cols(); ++b) {
      if (b > 0) out << '\t';
      out << format_double(weights(i, b));
    }
    out << '\n';
  }
}

MaxEntModel load_model(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  const auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next() || line != kMagic) throw FormatError(source, 1, "missing 'edu-seg-model v1' header");
  if (!next() || line != kLabelsLine) throw FormatError(source, 2, "expected 'labels B E BE I'");
  if (!next() || !line.starts_with("features ")) {
    throw FormatError(source, 3, "expected 'features <count>'");
  }
  std::size_t count = 0;
  {
    const char* begin = line.data() + 9;
    const char* end = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(begin, end, count);
    if (ec != std::errc() || ptr != end) throw FormatError(source, 3, "bad feature count");
  }

  FeatureSpace space;
  std::vector<double> values;
  values.reserve(count * kNumLabels);
  for (std::size_t i = 0; i < count; ++i) {
    if (!next()) {
      throw FormatError(source, line_no, "feature count " + std::to_string(count) +
                                             " but only " + std::to_string(i) + " features present");
    }
    if (space.find(line)) throw FormatError(source, line_no, "duplicate feature '" + line + "'");
    space.intern(line);
    if (!next()) {
      throw FormatError(source, line_no, "missing weight line for feature " + std::to_string(i));
    }
    const char* at = line.data();
    const char* end = line.data() + line.size();
    for (std::size_t b = 0; b < kNumLabels; ++b) {
      if (b > 0) {
        if (at == end || *at != '\t') throw FormatError(source, line_no, "expected 4 tab-separated weights");
        ++at;
      }
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(at, end, value);
      if (ec != std::errc() || !std::isfinite(value)) {
        throw FormatError(source, line_no, "bad weight value");
      }
      values.push_back(value);
      at = ptr;
    }
    if (at != end) throw FormatError(source, line_no, "expected 4 tab-separated weights");
  }
  while (next()) {
    if (!line.empty()) {
      throw FormatError(source, line_no, "more weight lines than the declared " +
                                             std::to_string(count) + " features");
    }
  }
  const auto rows = static_cast<Eigen::Index>(count);
  WeightMatrix<double> weights =
      Eigen::Map<const WeightMatrix<double>>(values.data(), rows, static_cast<Eigen::Index>(kNumLabels));
  return MaxEntModel(std::move(space), std::move(weights));
}

void save_model_file(const std::string& path, const MaxEntModel& model) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write model file " + path);
  save_model(out, model);
  if (!out) throw IoError("error writing model file " + path);
}

MaxEntModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file " + path);
  return load_model(in, path);
}

}  // namespace eduseg
