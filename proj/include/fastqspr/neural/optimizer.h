// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_NEURAL_OPTIMIZER_H_
#define FASTQSPR_NEURAL_OPTIMIZER_H_

#include "fastqspr/neural/network.h"

namespace fastqspr::nn {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  NetworkParameters first_moment;
  NetworkParameters second_moment;
  long long step = 0;

  // Zero moments shaped like params.
  static AdamState For(const NetworkParameters& params);
};

// One bias-corrected Adam update in place. Throws NetworkError on a
// non-finite gradient, leaving params and state untouched.
void AdamStep(NetworkParameters& params, const NetworkParameters& gradient, AdamState& state,
              const AdamConfig& config);

}  // namespace fastqspr::nn

#endif  // FASTQSPR_NEURAL_OPTIMIZER_H_
