// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_COMMON_MISSING_H_
#define FASTQSPR_COMMON_MISSING_H_

#include <cmath>
#include <limits>

namespace fastqspr {

// Missing-value sentinel shared by descriptor matrices and target matrices.
// Zero is a legitimate descriptor value, so a quiet NaN marks "no value".
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool IsMissing(double value) { return std::isnan(value); }

}  // namespace fastqspr

#endif  // FASTQSPR_COMMON_MISSING_H_
