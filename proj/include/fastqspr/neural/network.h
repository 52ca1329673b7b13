// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_NEURAL_NETWORK_H_
#define FASTQSPR_NEURAL_NETWORK_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "fastqspr/common/labeled_matrix.h"

namespace fastqspr::nn {

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Task { kRegression, kMultilabelClassification };

std::string_view TaskName(Task task);
// Accepts "regression" and "multilabel" (aliases "multilabel_classification",
// "classification").
Task ParseTask(std::string_view name);

struct NetworkSpec {
  int input_dim = 0;
  int hidden_layers = 2;
  int hidden_width = 1800;
  int output_dim = 1;
  Task task = Task::kRegression;

  void Validate() const;
  std::size_t ParameterCount() const;
  bool operator==(const NetworkSpec&) const = default;
};

using RowVector = Eigen::RowVectorXd;

// y = x * weights + bias, with weights stored fan_in x fan_out.
struct Layer {
  Matrix weights;
  RowVector bias;

  bool operator==(const Layer& other) const {
    return weights == other.weights && bias == other.bias;
  }
};

struct NetworkParameters {
  std::vector<Layer> layers;

  std::size_t Count() const;
  bool AllFinite() const;
  // Same shapes, every entry zero.
  NetworkParameters ZerosLike() const;
  bool operator==(const NetworkParameters&) const = default;
};

// Weights and biases uniform on [-1/sqrt(fan_in), 1/sqrt(fan_in)].
NetworkParameters InitNetwork(const NetworkSpec& spec, std::uint64_t seed);

// Regression: raw outputs. Classification: per-label logistic probabilities.
Matrix Forward(const NetworkParameters& params, const NetworkSpec& spec, const Matrix& batch);

// Mean squared error (regression) or mean binary cross-entropy on
// probabilities (classification) over the non-missing target entries.
// Throws NetworkError when every entry is missing.
double Loss(const Matrix& outputs, const Matrix& targets, Task task);

struct LossAndGradient {
  double loss = 0.0;
  NetworkParameters gradient;
};

// Loss of Forward(params, spec, batch) against targets and its exact
// gradient. Classification loss is evaluated from the logits for numerical
// stability; it equals Loss() on the probabilities.
LossAndGradient Backward(const NetworkParameters& params, const NetworkSpec& spec, const Matrix& batch,
                         const Matrix& targets);

}  // namespace fastqspr::nn

#endif  // FASTQSPR_NEURAL_NETWORK_H_
