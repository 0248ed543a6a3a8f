// Copyright (c) 2026 avo authors
// SPDX-License-Identifier: Apache-2.0
#include "avo/kernels.hpp"

namespace avo::kern::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const Ops scalar_ops = {dot_scalar, axpy_scalar};

}  // namespace avo::kern::detail
