// Copyright (c) 2026 avo authors
// SPDX-License-Identifier: Apache-2.0
#include "avo/kernels.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace avo::kern {

namespace {

bool cpu_has_avx2_fma() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const detail::Ops* ops_for(Backend b) {
  switch (b) {
    case Backend::scalar: return &detail::scalar_ops;
    case Backend::avx2: return &detail::avx2_ops;
    case Backend::neon: return &detail::neon_ops;
  }
  return &detail::scalar_ops;
}

struct Dispatch {
  Backend backend;
  const detail::Ops* ops;

  Dispatch() {
    backend = Backend::scalar;
    if (backend_available(Backend::avx2)) backend = Backend::avx2;
    if (backend_available(Backend::neon)) backend = Backend::neon;
    if (const char* env = std::getenv("AVO_KERNEL_BACKEND")) {
      const std::string want(env);
      for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
        if (want == backend_name(b)) {
          if (!backend_available(b))
            throw std::invalid_argument("AVO_KERNEL_BACKEND: backend not available: " + want);
          backend = b;
        }
      }
    }
    ops = ops_for(backend);
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "scalar";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2: return detail::avx2_ops.dot != nullptr && cpu_has_avx2_fma();
    case Backend::neon: return detail::neon_ops.dot != nullptr;
  }
  return false;
}

Backend active_backend() { return dispatch().backend; }

void force_backend(Backend b) {
  if (!backend_available(b))
    throw std::invalid_argument(std::string("kernel backend not available: ") +
                                std::string(backend_name(b)));
  dispatch().backend = b;
  dispatch().ops = ops_for(b);
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return dispatch().ops->dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  dispatch().ops->axpy(alpha, x.data(), y.data(), x.size());
}

double sum_sq(std::span<const double> a) {
  return dispatch().ops->dot(a.data(), a.data(), a.size());
}

void matvec(std::span<const double> w, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y) {
  assert(w.size() == rows * cols && x.size() == cols && y.size() == rows);
  const detail::Ops* ops = dispatch().ops;
  for (std::size_t r = 0; r < rows; ++r) y[r] = ops->dot(w.data() + r * cols, x.data(), cols);
}

void matvec_t_acc(std::span<const double> w, std::size_t rows, std::size_t cols,
                  std::span<const double> u, std::span<double> out) {
  assert(w.size() == rows * cols && u.size() == rows && out.size() == cols);
  const detail::Ops* ops = dispatch().ops;
  for (std::size_t r = 0; r < rows; ++r) {
    if (u[r] != 0.0) ops->axpy(u[r], w.data() + r * cols, out.data(), cols);
  }
}

void ger_acc(std::span<double> a, std::size_t rows, std::size_t cols, double alpha,
             std::span<const double> u, std::span<const double> v) {
  assert(a.size() == rows * cols && u.size() == rows && v.size() == cols);
  const detail::Ops* ops = dispatch().ops;
  for (std::size_t r = 0; r < rows; ++r) {
    const double s = alpha * u[r];
    if (s != 0.0) ops->axpy(s, v.data(), a.data() + r * cols, cols);
  }
}

}  // namespace avo::kern
