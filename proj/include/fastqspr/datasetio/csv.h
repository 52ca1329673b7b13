// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_DATASETIO_CSV_H_
#define FASTQSPR_DATASETIO_CSV_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fastqspr::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Comma-delimited, RFC 4180 quoting (embedded commas, quotes, newlines),
// LF or CRLF line ends, optional UTF-8 byte-order mark. The first record is
// the header. Blank lines are skipped.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; throws IoError naming it when absent.
  std::size_t ColumnIndex(std::string_view name) const;
};

CsvTable ParseCsv(std::string_view text);
CsvTable ReadCsv(const std::filesystem::path& path);

// Quotes a field when it contains a delimiter, quote or line break.
std::string CsvField(std::string_view value);
std::string CsvLine(const std::vector<std::string>& fields);

// Shortest text that parses back to the same double ("%.17g"); missing
// values render as an empty field.
std::string FormatDouble(double value);

}  // namespace fastqspr::io

#endif  // FASTQSPR_DATASETIO_CSV_H_
