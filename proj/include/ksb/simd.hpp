#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

#include "ksb/array.hpp"

namespace ksb::simd {

// Data-parallel inner loops shared by the encoding operator and the solvers.
// Two implementations exist: a scalar reference and an AVX2 variant compiled
// into its own translation unit; one is selected at runtime. Reductions
// accumulate in double regardless of lane width (float*float products are
// exact in double), so scalar/AVX2 results differ only by summation order.
struct Kernels {
  // dst[i] = a[i] * b[i]
  void (*cmul)(cfloat* dst, const cfloat* a, const cfloat* b, std::size_t n);
  // dst[i] += conj(a[i]) * b[i]
  void (*cmul_conj_acc)(cfloat* dst, const cfloat* a, const cfloat* b, std::size_t n);
  // dst[i] = a[i] - b[i]
  void (*csub)(cfloat* dst, const cfloat* a, const cfloat* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*caxpy)(cfloat* y, cfloat alpha, const cfloat* x, std::size_t n);
  // a[i] *= s
  void (*scale)(cfloat* a, float s, std::size_t n);
  // dst[i] = src[i] * m[i], m in {0,1}; exact (blend, no arithmetic)
  void (*mask_mul)(cfloat* dst, const cfloat* src, const std::uint8_t* m, std::size_t n);
  // dst[i] += |src[i]|^2
  void (*abs2_acc)(float* dst, const cfloat* src, std::size_t n);
  // sum conj(a[i]) * b[i], double accumulation
  std::complex<double> (*cdotc)(const cfloat* a, const cfloat* b, std::size_t n);
  // sum |a[i]|^2, double accumulation
  double (*norm2)(const cfloat* a, std::size_t n);
  // isotropic soft-threshold of a gradient-channel pair:
  // m = sqrt(|gx|^2 + |gy|^2); both channels scaled by max(0, 1 - t/m)
  void (*tv_shrink)(cfloat* gx, cfloat* gy, float t, std::size_t n);

  const char* name;
};

const Kernels& scalar_kernels();

// AVX2+FMA variant, or nullptr when the build or the host CPU lacks it.
const Kernels* avx2_kernels();

// Active implementation: AVX2 when available, scalar otherwise.
// KSPACE_BENCH_SIMD=scalar|avx2 overrides (read once).
const Kernels& active();

}  // namespace ksb::simd
