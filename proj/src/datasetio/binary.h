// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

// Little-endian encoding of doubles and FNV-1a hashing shared by the cache
// and checkpoint formats.

#ifndef FASTQSPR_DATASETIO_BINARY_H_
#define FASTQSPR_DATASETIO_BINARY_H_

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace fastqspr::io::internal {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

inline std::uint64_t Fnv1a(std::string_view bytes, std::uint64_t hash = kFnvOffset) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

inline void AppendDouble(std::string& out, double value) {
  const auto bits = std::bit_cast<std::uint64_t>(value);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

inline double ReadDouble(std::string_view bytes, std::size_t offset) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[offset + i])) << (8 * i);
  }
  return std::bit_cast<double>(bits);
}

inline std::string Hex(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) out[i] = kDigits[value & 0xf];
  return out;
}

}  // namespace fastqspr::io::internal

#endif  // FASTQSPR_DATASETIO_BINARY_H_
