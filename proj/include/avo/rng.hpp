// Copyright (c) 2026 avo authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

// Deterministic random streams. xoshiro256++ seeded through splitmix64, with
// hierarchical stream derivation so that per-sample streams are a pure
// function of (root seed, stream path). Standard-library distributions are
// avoided on purpose: their output is implementation-defined and the run
// records here must be reproducible bit-for-bit.
namespace avo {

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  /// Child stream independent of this one; does not consume state.
  RngStream derive(std::uint64_t stream) const;

  std::uint64_t next_u64();

  /// Uniform on [0,1) with 53 random bits.
  double uniform01();

  /// Uniform on (0,1]; safe as a log() argument.
  double uniform_pos();

  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (two uniforms per call, no cached spare).
  double normal();

  /// Unbiased integer in [0, n); n must be > 0.
  std::uint64_t uniform_below(std::uint64_t n);

 private:
  std::array<std::uint64_t, 4> state_;
  std::uint64_t seed_key_;  // derivation key: mixes root seed and stream path
};

}  // namespace avo
