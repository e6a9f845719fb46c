#include <cmath>

#include "ksb/simd.hpp"

// Reference kernels. Kept branch-free and in plain float arithmetic so the
// SIMD variants have an unambiguous target to be checked against.

namespace ksb::simd {
namespace {

void s_cmul(cfloat* dst, const cfloat* a, const cfloat* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float ar = a[i].real(), ai = a[i].imag();
    const float br = b[i].real(), bi = b[i].imag();
    dst[i] = cfloat(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void s_cmul_conj_acc(cfloat* dst, const cfloat* a, const cfloat* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float ar = a[i].real(), ai = a[i].imag();
    const float br = b[i].real(), bi = b[i].imag();
    dst[i] += cfloat(ar * br + ai * bi, ar * bi - ai * br);
  }
}

void s_csub(cfloat* dst, const cfloat* a, const cfloat* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

void s_caxpy(cfloat* y, cfloat alpha, const cfloat* x, std::size_t n) {
  const float pr = alpha.real(), pi = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const float xr = x[i].real(), xi = x[i].imag();
    y[i] += cfloat(pr * xr - pi * xi, pr * xi + pi * xr);
  }
}

void s_scale(cfloat* a, float s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] = cfloat(a[i].real() * s, a[i].imag() * s);
}

void s_mask_mul(cfloat* dst, const cfloat* src, const std::uint8_t* m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = m[i] ? src[i] : cfloat(0.0f, 0.0f);
}

void s_abs2_acc(float* dst, const cfloat* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float r = src[i].real(), im = src[i].imag();
    dst[i] += r * r + im * im;
  }
}

std::complex<double> s_cdotc(const cfloat* a, const cfloat* b, std::size_t n) {
  double sr = 0.0, si = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    sr += ar * br + ai * bi;
    si += ar * bi - ai * br;
  }
  return {sr, si};
}

double s_norm2(const cfloat* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = a[i].real(), im = a[i].imag();
    s += r * r + im * im;
  }
  return s;
}

void s_tv_shrink(cfloat* gx, cfloat* gy, float t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float xr = gx[i].real(), xi = gx[i].imag();
    const float yr = gy[i].real(), yi = gy[i].imag();
    const float mag = std::sqrt(xr * xr + xi * xi + yr * yr + yi * yi);
    const float f = mag > t ? (mag - t) / mag : 0.0f;
    gx[i] = cfloat(xr * f, xi * f);
    gy[i] = cfloat(yr * f, yi * f);
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {s_cmul, s_cmul_conj_acc, s_csub,     s_caxpy, s_scale,
                            s_mask_mul, s_abs2_acc,  s_cdotc,    s_norm2, s_tv_shrink,
                            "scalar"};
  return k;
}

}  // namespace ksb::simd
