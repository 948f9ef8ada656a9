// Copyright (c) 2026 semilab developers.
// SPDX-License-Identifier: Apache-2.0
#include "semilab/rng.hpp"

#include <cmath>

namespace semilab {

namespace {
constexpr std::uint64_t kPcgMultiplier = 6364136223846793005ULL;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : state_(0), inc_((stream_index << 1u) | 1u), seed_(seed), stream_index_(stream_index) {
  next_u32();
  state_ += seed;
  next_u32();
}

std::uint32_t RngStream::next_u32() {
  const std::uint64_t old = state_;
  state_ = old * kPcgMultiplier + inc_;
  const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  // First uniform shifted into (0, 1] so the log is finite.
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace semilab
