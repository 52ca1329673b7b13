// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_NEURAL_TRAINER_H_
#define FASTQSPR_NEURAL_TRAINER_H_

#include <cstdint>
#include <vector>

#include "fastqspr/neural/network.h"

namespace fastqspr::nn {

struct TrainConfig {
  int number_epochs = 100;
  int batch_size = 64;
  int patience = 15;
  double learning_rate = 1e-3;
  std::uint64_t random_seed = 0;

  void Validate() const;
};

struct EpochRecord {
  int epoch = 0;  // 1-based
  double train_loss = 0.0;
  double validation_loss = 0.0;

  bool operator==(const EpochRecord&) const = default;
};

struct TrainResult {
  NetworkParameters params;  // from best_epoch
  std::vector<EpochRecord> log;
  int best_epoch = 0;
  double best_validation_loss = 0.0;
  bool stopped_early = false;
};

// Adam on shuffled mini-batches (the last partial batch is kept). The
// validation loss is evaluated after every epoch; training stops once it
// has not improved for `patience` consecutive epochs, and the parameters of
// the best epoch are returned. Initialization and shuffling derive from
// random_seed only.
TrainResult TrainModel(const NetworkSpec& spec, const TrainConfig& config, const Matrix& train_x,
                       const Matrix& train_y, const Matrix& val_x, const Matrix& val_y);

}  // namespace fastqspr::nn

#endif  // FASTQSPR_NEURAL_TRAINER_H_
