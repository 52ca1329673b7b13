// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/neural/optimizer.h"

#include <cmath>

namespace fastqspr::nn {
namespace {

template <typename Param, typename Grad>
void Update(Param& p, const Grad& g, Param& m, Param& v, const AdamConfig& c, double correction1,
            double correction2) {
  m = c.beta1 * m + (1.0 - c.beta1) * g;
  v = c.beta2 * v + (1.0 - c.beta2) * g.cwiseProduct(g);
  p.array() -= c.learning_rate * (m.array() / correction1) /
               ((v.array() / correction2).sqrt() + c.epsilon);
}

}  // namespace

AdamState AdamState::For(const NetworkParameters& params) {
  return {params.ZerosLike(), params.ZerosLike(), 0};
}

void AdamStep(NetworkParameters& params, const NetworkParameters& gradient, AdamState& state,
              const AdamConfig& config) {
  if (gradient.layers.size() != params.layers.size()) throw NetworkError("gradient does not match parameters");
  for (std::size_t l = 0; l < params.layers.size(); ++l) {
    const auto& g = gradient.layers[l];
    if (g.weights.rows() != params.layers[l].weights.rows() || g.weights.cols() != params.layers[l].weights.cols() ||
        g.bias.size() != params.layers[l].bias.size()) {
      throw NetworkError("gradient does not match parameters");
    }
  }
  if (!gradient.AllFinite()) throw NetworkError("non-finite gradient; aborting training");
  if (state.first_moment.layers.empty()) state = AdamState::For(params);
  ++state.step;
  const double correction1 = 1.0 - std::pow(config.beta1, static_cast<double>(state.step));
  const double correction2 = 1.0 - std::pow(config.beta2, static_cast<double>(state.step));
  for (std::size_t l = 0; l < params.layers.size(); ++l) {
    auto& p = params.layers[l];
    auto& m = state.first_moment.layers[l];
    auto& v = state.second_moment.layers[l];
    Update(p.weights, gradient.layers[l].weights, m.weights, v.weights, config, correction1, correction2);
    Update(p.bias, gradient.layers[l].bias, m.bias, v.bias, config, correction1, correction2);
  }
}

}  // namespace fastqspr::nn
