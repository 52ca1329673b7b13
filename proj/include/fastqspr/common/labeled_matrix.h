// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_COMMON_LABELED_MATRIX_H_
#define FASTQSPR_COMMON_LABELED_MATRIX_H_

#include <string>
#include <vector>

#include <Eigen/Core>

namespace fastqspr {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// Rows are samples, columns are named features (or targets). Missing entries
// hold kMissing.
struct LabeledMatrix {
  std::vector<std::string> columns;
  Matrix values;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

// Row subset in the given order.
inline Matrix SelectRows(const Matrix& m, const std::vector<int>& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(i) = m.row(rows[i]);
  return out;
}

inline LabeledMatrix SelectRows(const LabeledMatrix& m, const std::vector<int>& rows) {
  return {m.columns, SelectRows(m.values, rows)};
}

}  // namespace fastqspr

#endif  // FASTQSPR_COMMON_LABELED_MATRIX_H_
