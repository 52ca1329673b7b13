// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/neural/trainer.h"

#include <cmath>
#include <numeric>
#include <span>
#include <string>

#include "fastqspr/common/missing.h"
#include "fastqspr/common/rng.h"
#include "fastqspr/neural/optimizer.h"

namespace fastqspr::nn {
namespace {

// Keeps initialization and shuffling on unrelated streams.
constexpr std::uint64_t kShuffleStream = 0x9e3779b97f4a7c15ULL;

bool HasObservedTarget(const Matrix& y) {
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (!IsMissing(y.data()[i])) return true;
  }
  return false;
}

}  // namespace

void TrainConfig::Validate() const {
  if (number_epochs < 1) throw NetworkError("number_epochs must be at least 1");
  if (batch_size < 1) throw NetworkError("batch_size must be at least 1");
  if (patience < 1 || patience > number_epochs) {
    throw NetworkError("patience must lie in [1, number_epochs]");
  }
  if (!(learning_rate > 0.0)) throw NetworkError("learning_rate must be positive");
}

TrainResult TrainModel(const NetworkSpec& spec, const TrainConfig& config, const Matrix& train_x,
                       const Matrix& train_y, const Matrix& val_x, const Matrix& val_y) {
  spec.Validate();
  config.Validate();
  if (train_x.rows() == 0) throw NetworkError("training set is empty");
  if (val_x.rows() == 0) throw NetworkError("validation set is empty");
  if (train_x.rows() != train_y.rows() || val_x.rows() != val_y.rows()) {
    throw NetworkError("feature and target row counts differ");
  }
  if (!HasObservedTarget(val_y)) throw NetworkError("validation set has no observed targets");

  TrainResult result;
  NetworkParameters params = InitNetwork(spec, config.random_seed);
  AdamState adam = AdamState::For(params);
  const AdamConfig adam_config{.learning_rate = config.learning_rate};
  Rng shuffle_rng(config.random_seed ^ kShuffleStream);

  std::vector<int> order(static_cast<std::size_t>(train_x.rows()));
  std::iota(order.begin(), order.end(), 0);
  int since_best = 0;
  result.best_validation_loss = INFINITY;
  result.params = params;

  for (int epoch = 1; epoch <= config.number_epochs; ++epoch) {
    shuffle_rng.Shuffle(std::span<int>(order));
    double weighted_loss = 0.0;
    std::size_t seen = 0;
    for (std::size_t begin = 0; begin < order.size(); begin += config.batch_size) {
      const std::size_t end = std::min(order.size(), begin + static_cast<std::size_t>(config.batch_size));
      const std::vector<int> rows(order.begin() + begin, order.begin() + end);
      const Matrix y = SelectRows(train_y, rows);
      if (!HasObservedTarget(y)) continue;
      const auto step = Backward(params, spec, SelectRows(train_x, rows), y);
      if (!std::isfinite(step.loss)) throw NetworkError("non-finite training loss at epoch " + std::to_string(epoch));
      AdamStep(params, step.gradient, adam, adam_config);
      weighted_loss += step.loss * static_cast<double>(rows.size());
      seen += rows.size();
    }
    const double val_loss = Loss(Forward(params, spec, val_x), val_y, spec.task);
    if (!std::isfinite(val_loss)) throw NetworkError("non-finite validation loss at epoch " + std::to_string(epoch));
    result.log.push_back({epoch, seen > 0 ? weighted_loss / static_cast<double>(seen) : kMissing, val_loss});

    if (val_loss < result.best_validation_loss) {
      result.best_validation_loss = val_loss;
      result.best_epoch = epoch;
      result.params = params;
      since_best = 0;
    } else if (++since_best >= config.patience) {
      result.stopped_early = epoch < config.number_epochs;
      break;
    }
  }
  return result;
}

}  // namespace fastqspr::nn
