// Copyright (c) 2026 avo authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Dense double-precision kernels used by the discriminator's forward and
// backward passes. A scalar reference implementation always exists; on x86
// an AVX2+FMA variant (and on aarch64 a NEON variant) is selected at runtime.
// The active backend can be forced, e.g. for equivalence tests or via the
// AVO_KERNEL_BACKEND environment variable (values: scalar, avx2, neon).
namespace avo::kern {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
void force_backend(Backend b);  // throws std::invalid_argument if unavailable

/// sum_i a[i]*b[i]
double dot(std::span<const double> a, std::span<const double> b);

/// y[i] += alpha*x[i]
void axpy(double alpha, std::span<const double> x, std::span<double> y);

/// sum_i a[i]^2
double sum_sq(std::span<const double> a);

/// y = W x with W row-major [rows x cols]
void matvec(std::span<const double> w, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y);

/// out += W^T u with W row-major [rows x cols], u of length rows
void matvec_t_acc(std::span<const double> w, std::size_t rows, std::size_t cols,
                  std::span<const double> u, std::span<double> out);

/// A += alpha * u v^T with A row-major [rows x cols]
void ger_acc(std::span<double> a, std::size_t rows, std::size_t cols, double alpha,
             std::span<const double> u, std::span<const double> v);

namespace detail {
struct Ops {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
};
extern const Ops scalar_ops;
extern const Ops avx2_ops;  // null members when not built for x86
extern const Ops neon_ops;  // null members when not built for aarch64
}  // namespace detail

}  // namespace avo::kern
