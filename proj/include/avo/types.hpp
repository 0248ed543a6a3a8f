// Copyright (c) 2026 avo authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace avo {

using Vec = std::vector<double>;

/// Half-open is not implied; bounds are inclusive on both sides.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

inline bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

/// Thrown when a training run must stop (non-finite gradients, guard-band
/// rejection cap, exhausted simulation budget).
class RunAbort : public std::runtime_error {
 public:
  explicit RunAbort(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace avo
