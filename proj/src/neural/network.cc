// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/neural/network.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fastqspr/common/missing.h"
#include "fastqspr/common/rng.h"

namespace fastqspr::nn {
namespace {

std::vector<std::pair<int, int>> LayerShapes(const NetworkSpec& spec) {
  std::vector<std::pair<int, int>> shapes;
  int fan_in = spec.input_dim;
  for (int l = 0; l < spec.hidden_layers; ++l) {
    shapes.emplace_back(fan_in, spec.hidden_width);
    fan_in = spec.hidden_width;
  }
  shapes.emplace_back(fan_in, spec.output_dim);
  return shapes;
}

void CheckShapes(const NetworkParameters& params, const NetworkSpec& spec, const Matrix& batch) {
  const auto shapes = LayerShapes(spec);
  if (params.layers.size() != shapes.size()) throw NetworkError("parameter layer count does not match spec");
  for (std::size_t l = 0; l < shapes.size(); ++l) {
    const auto& layer = params.layers[l];
    if (layer.weights.rows() != shapes[l].first || layer.weights.cols() != shapes[l].second ||
        layer.bias.size() != shapes[l].second) {
      throw NetworkError("layer " + std::to_string(l) + " has the wrong shape");
    }
  }
  if (batch.cols() != spec.input_dim) {
    throw NetworkError("batch has " + std::to_string(batch.cols()) + " columns, network expects " +
                       std::to_string(spec.input_dim));
  }
}

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double Softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

Matrix Affine(const Matrix& x, const Layer& layer) {
  Matrix z(x.rows(), layer.weights.cols());
  z.noalias() = x * layer.weights;
  z.rowwise() += layer.bias;
  return z;
}

void CheckTargets(const Matrix& outputs, const Matrix& targets) {
  if (outputs.rows() != targets.rows() || outputs.cols() != targets.cols()) {
    throw NetworkError("outputs and targets differ in shape");
  }
}

}  // namespace

std::string_view TaskName(Task task) {
  return task == Task::kRegression ? "regression" : "multilabel_classification";
}

Task ParseTask(std::string_view name) {
  if (name == "regression") return Task::kRegression;
  if (name == "multilabel" || name == "multilabel_classification" || name == "classification") {
    return Task::kMultilabelClassification;
  }
  throw NetworkError("unknown problem type '" + std::string(name) + "'");
}

void NetworkSpec::Validate() const {
  if (input_dim < 1) throw NetworkError("input_dim must be at least 1");
  if (hidden_layers < 0) throw NetworkError("hidden_layers must be non-negative");
  if (hidden_layers > 0 && hidden_width < 1) throw NetworkError("hidden_width must be at least 1");
  if (output_dim < 1) throw NetworkError("output_dim must be at least 1");
}

std::size_t NetworkSpec::ParameterCount() const {
  std::size_t count = 0;
  for (const auto& [in, out] : LayerShapes(*this)) {
    count += static_cast<std::size_t>(in) * out + static_cast<std::size_t>(out);
  }
  return count;
}

std::size_t NetworkParameters::Count() const {
  std::size_t count = 0;
  for (const auto& layer : layers) count += layer.weights.size() + layer.bias.size();
  return count;
}

bool NetworkParameters::AllFinite() const {
  return std::all_of(layers.begin(), layers.end(), [](const Layer& l) {
    return l.weights.allFinite() && l.bias.allFinite();
  });
}

NetworkParameters NetworkParameters::ZerosLike() const {
  NetworkParameters zeros;
  for (const auto& layer : layers) {
    zeros.layers.push_back({Matrix::Zero(layer.weights.rows(), layer.weights.cols()),
                            RowVector::Zero(layer.bias.size())});
  }
  return zeros;
}

NetworkParameters InitNetwork(const NetworkSpec& spec, std::uint64_t seed) {
  spec.Validate();
  Rng rng(seed);
  NetworkParameters params;
  for (const auto& [in, out] : LayerShapes(spec)) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(in));
    Layer layer{Matrix(in, out), RowVector(out)};
    for (Eigen::Index i = 0; i < layer.weights.size(); ++i) layer.weights.data()[i] = rng.Uniform(-bound, bound);
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) layer.bias[i] = rng.Uniform(-bound, bound);
    params.layers.push_back(std::move(layer));
  }
  return params;
}

Matrix Forward(const NetworkParameters& params, const NetworkSpec& spec, const Matrix& batch) {
  CheckShapes(params, spec, batch);
  Matrix a = batch;
  for (std::size_t l = 0; l + 1 < params.layers.size(); ++l) a = Affine(a, params.layers[l]).cwiseMax(0.0);
  Matrix out = Affine(a, params.layers.back());
  if (spec.task == Task::kMultilabelClassification) out = out.unaryExpr(&Sigmoid);
  return out;
}

double Loss(const Matrix& outputs, const Matrix& targets, Task task) {
  CheckTargets(outputs, targets);
  double sum = 0.0;
  long long observed = 0;
  for (Eigen::Index r = 0; r < outputs.rows(); ++r) {
    for (Eigen::Index c = 0; c < outputs.cols(); ++c) {
      const double t = targets(r, c);
      if (IsMissing(t)) continue;
      ++observed;
      if (task == Task::kRegression) {
        const double d = outputs(r, c) - t;
        sum += d * d;
      } else {
        const double p = std::clamp(outputs(r, c), 1e-15, 1.0 - 1e-15);
        sum -= t * std::log(p) + (1.0 - t) * std::log1p(-p);
      }
    }
  }
  if (observed == 0) throw NetworkError("every target entry is missing");
  return sum / static_cast<double>(observed);
}

LossAndGradient Backward(const NetworkParameters& params, const NetworkSpec& spec, const Matrix& batch,
                         const Matrix& targets) {
  CheckShapes(params, spec, batch);
  const std::size_t num_layers = params.layers.size();
  // inputs[l] feeds layer l; pre[l] is its pre-activation.
  std::vector<Matrix> inputs(num_layers);
  std::vector<Matrix> pre(num_layers);
  inputs[0] = batch;
  for (std::size_t l = 0; l < num_layers; ++l) {
    pre[l] = Affine(inputs[l], params.layers[l]);
    if (l + 1 < num_layers) inputs[l + 1] = pre[l].cwiseMax(0.0);
  }
  const Matrix& out = pre.back();
  CheckTargets(out, targets);

  long long observed = 0;
  for (Eigen::Index i = 0; i < targets.size(); ++i) observed += !IsMissing(targets.data()[i]);
  if (observed == 0) throw NetworkError("every target entry is missing");
  const double scale = 1.0 / static_cast<double>(observed);

  LossAndGradient result;
  Matrix delta = Matrix::Zero(out.rows(), out.cols());
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      const double t = targets(r, c);
      if (IsMissing(t)) continue;
      const double z = out(r, c);
      if (spec.task == Task::kRegression) {
        result.loss += (z - t) * (z - t);
        delta(r, c) = 2.0 * (z - t) * scale;
      } else {
        result.loss += Softplus(z) - t * z;
        delta(r, c) = (Sigmoid(z) - t) * scale;
      }
    }
  }
  result.loss *= scale;

  result.gradient.layers.resize(num_layers);
  for (std::size_t l = num_layers; l-- > 0;) {
    auto& grad = result.gradient.layers[l];
    grad.weights.noalias() = inputs[l].transpose() * delta;
    grad.bias = delta.colwise().sum();
    if (l == 0) break;
    Matrix upstream(delta.rows(), params.layers[l].weights.rows());
    upstream.noalias() = delta * params.layers[l].weights.transpose();
    delta = upstream.cwiseProduct((pre[l - 1].array() > 0.0).cast<double>().matrix());
  }
  return result;
}

}  // namespace fastqspr::nn
