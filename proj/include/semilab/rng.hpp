// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace semilab {

/// Seeded, stream-partitioned random number generator (PCG32 core).
///
/// Each (seed, stream_index) pair selects one of 2^63 distinct full-period
/// sequences; distinct stream indices use distinct LCG increments, so
/// streams never share a sequence. Identical (seed, stream_index) always
/// reproduces the identical draw sequence, independent of platform: the
/// uniform and normal transforms below are fixed arithmetic, not
/// implementation-defined library distributions.
///
/// Stream-index allocation used by the experiment runner: trial j of a
/// Monte Carlo run owns stream j; fixed-purpose streams (probe vectors,
/// ensemble sampling, reference operators) live at kStreamFixedBase and
/// above so they can never collide with trial streams.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal via Box-Muller; consumes exactly two 64-bit draws.
  double normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t seed_;
  std::uint64_t stream_index_;
};

// Fixed-purpose stream indices (see class comment).
inline constexpr std::uint64_t kStreamFixedBase = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kStreamProbeVectors = kStreamFixedBase + 0;
inline constexpr std::uint64_t kStreamEnsembleMc = kStreamFixedBase + 1;
inline constexpr std::uint64_t kStreamReferenceMc = kStreamFixedBase + 2;

}  // namespace semilab
