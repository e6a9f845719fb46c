// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma on x86-64; availability is still checked at runtime before
// dispatch, so the binary stays runnable on older CPUs.

#include "ksb/simd.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

namespace ksb::simd {
namespace {

// 4 interleaved complex64 per __m256: (r0,i0,r1,i1,r2,i2,r3,i3)

inline __m256 cmul4(__m256 a, __m256 b) {
  __m256 ar = _mm256_moveldup_ps(a);
  __m256 ai = _mm256_movehdup_ps(a);
  __m256 bswap = _mm256_permute_ps(b, 0xB1);
  return _mm256_fmaddsub_ps(ar, b, _mm256_mul_ps(ai, bswap));
}

inline __m256 cmul_conj4(__m256 a, __m256 b) {
  // conj(a)*b: (ar*br + ai*bi, ar*bi - ai*br)
  __m256 ar = _mm256_moveldup_ps(a);
  __m256 ai = _mm256_movehdup_ps(a);
  __m256 bswap = _mm256_permute_ps(b, 0xB1);
  return _mm256_fmsubadd_ps(ar, b, _mm256_mul_ps(ai, bswap));
}

void v_cmul(cfloat* dst, const cfloat* a, const cfloat* b, std::size_t n) {
  std::size_t i = 0;
  auto* d = reinterpret_cast<float*>(dst);
  const auto* pa = reinterpret_cast<const float*>(a);
  const auto* pb = reinterpret_cast<const float*>(b);
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_ps(d + 2 * i,
                     cmul4(_mm256_loadu_ps(pa + 2 * i), _mm256_loadu_ps(pb + 2 * i)));
  for (; i < n; ++i) {
    const float ar = a[i].real(), ai = a[i].imag();
    const float br = b[i].real(), bi = b[i].imag();
    dst[i] = cfloat(std::fma(ar, br, -(ai * bi)), std::fma(ar, bi, ai * br));
  }
}

void v_cmul_conj_acc(cfloat* dst, const cfloat* a, const cfloat* b, std::size_t n) {
  std::size_t i = 0;
  auto* d = reinterpret_cast<float*>(dst);
  const auto* pa = reinterpret_cast<const float*>(a);
  const auto* pb = reinterpret_cast<const float*>(b);
  for (; i + 4 <= n; i += 4) {
    __m256 acc = _mm256_loadu_ps(d + 2 * i);
    acc = _mm256_add_ps(acc,
                        cmul_conj4(_mm256_loadu_ps(pa + 2 * i), _mm256_loadu_ps(pb + 2 * i)));
    _mm256_storeu_ps(d + 2 * i, acc);
  }
  for (; i < n; ++i) {
    const float ar = a[i].real(), ai = a[i].imag();
    const float br = b[i].real(), bi = b[i].imag();
    dst[i] += cfloat(std::fma(ar, br, ai * bi), std::fma(ar, bi, -(ai * br)));
  }
}

void v_csub(cfloat* dst, const cfloat* a, const cfloat* b, std::size_t n) {
  std::size_t i = 0;
  auto* d = reinterpret_cast<float*>(dst);
  const auto* pa = reinterpret_cast<const float*>(a);
  const auto* pb = reinterpret_cast<const float*>(b);
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_ps(d + 2 * i,
                     _mm256_sub_ps(_mm256_loadu_ps(pa + 2 * i), _mm256_loadu_ps(pb + 2 * i)));
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}

void v_caxpy(cfloat* y, cfloat alpha, const cfloat* x, std::size_t n) {
  std::size_t i = 0;
  auto* d = reinterpret_cast<float*>(y);
  const auto* px = reinterpret_cast<const float*>(x);
  const __m256 ar = _mm256_set1_ps(alpha.real());
  const __m256 ai = _mm256_set1_ps(alpha.imag());
  for (; i + 4 <= n; i += 4) {
    __m256 vx = _mm256_loadu_ps(px + 2 * i);
    __m256 xswap = _mm256_permute_ps(vx, 0xB1);
    __m256 prod = _mm256_fmaddsub_ps(ar, vx, _mm256_mul_ps(ai, xswap));
    _mm256_storeu_ps(d + 2 * i, _mm256_add_ps(_mm256_loadu_ps(d + 2 * i), prod));
  }
  const float pr = alpha.real(), pi = alpha.imag();
  for (; i < n; ++i) {
    const float xr = x[i].real(), xi = x[i].imag();
    y[i] += cfloat(std::fma(pr, xr, -(pi * xi)), std::fma(pr, xi, pi * xr));
  }
}

void v_scale(cfloat* a, float s, std::size_t n) {
  std::size_t i = 0;
  auto* d = reinterpret_cast<float*>(a);
  const __m256 vs = _mm256_set1_ps(s);
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_ps(d + 2 * i, _mm256_mul_ps(_mm256_loadu_ps(d + 2 * i), vs));
  for (; i < n; ++i) a[i] = cfloat(a[i].real() * s, a[i].imag() * s);
}

void v_mask_mul(cfloat* dst, const cfloat* src, const std::uint8_t* m, std::size_t n) {
  std::size_t i = 0;
  auto* d = reinterpret_cast<float*>(dst);
  const auto* ps = reinterpret_cast<const float*>(src);
  const __m256i pair_idx = _mm256_setr_epi32(0, 0, 1, 1, 2, 2, 3, 3);
  for (; i + 4 <= n; i += 4) {
    __m128i bytes = _mm_cvtsi32_si128(*reinterpret_cast<const int*>(m + i));
    __m256i lanes = _mm256_cvtepu8_epi32(bytes);  // 4 ints in lanes 0..3
    __m256i nz = _mm256_cmpgt_epi32(lanes, _mm256_setzero_si256());
    __m256i sel = _mm256_permutevar8x32_epi32(nz, pair_idx);
    __m256 v = _mm256_and_ps(_mm256_loadu_ps(ps + 2 * i), _mm256_castsi256_ps(sel));
    _mm256_storeu_ps(d + 2 * i, v);
  }
  for (; i < n; ++i) dst[i] = m[i] ? src[i] : cfloat(0.0f, 0.0f);
}

// (x0+x1, x2+x3, x4+x5, x6+x7) of an 8-lane register
inline __m128 pair_sum(__m256 x) {
  __m256 h = _mm256_hadd_ps(x, x);
  __m128 lo = _mm256_castps256_ps128(h);
  __m128 hi = _mm256_extractf128_ps(h, 1);
  return _mm_shuffle_ps(lo, hi, _MM_SHUFFLE(1, 0, 1, 0));
}

void v_abs2_acc(float* dst, const cfloat* src, std::size_t n) {
  std::size_t i = 0;
  const auto* ps = reinterpret_cast<const float*>(src);
  for (; i + 4 <= n; i += 4) {
    __m256 v = _mm256_loadu_ps(ps + 2 * i);
    __m128 p = pair_sum(_mm256_mul_ps(v, v));
    _mm_storeu_ps(dst + i, _mm_add_ps(_mm_loadu_ps(dst + i), p));
  }
  for (; i < n; ++i) {
    const float r = src[i].real(), im = src[i].imag();
    dst[i] += r * r + im * im;
  }
}

inline double hsum4(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

std::complex<double> v_cdotc(const cfloat* a, const cfloat* b, std::size_t n) {
  std::size_t i = 0;
  const auto* pa = reinterpret_cast<const float*>(a);
  const auto* pb = reinterpret_cast<const float*>(b);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d odd_neg = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_cvtps_pd(_mm_loadu_ps(pa + 2 * i));  // (ar,ai,ar,ai)
    __m256d vb = _mm256_cvtps_pd(_mm_loadu_ps(pb + 2 * i));
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    __m256d bswap = _mm256_permute_pd(vb, 0x5);            // (bi,br) pairs
    __m256d balt = _mm256_xor_pd(bswap, odd_neg);          // (bi,-br)
    acc_im = _mm256_fmadd_pd(va, balt, acc_im);
  }
  double sr = hsum4(acc_re), si = hsum4(acc_im);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    sr += ar * br + ai * bi;
    si += ar * bi - ai * br;
  }
  return {sr, si};
}

double v_norm2(const cfloat* a, std::size_t n) {
  std::size_t i = 0;
  const auto* pa = reinterpret_cast<const float*>(a);
  __m256d acc = _mm256_setzero_pd();
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_cvtps_pd(_mm_loadu_ps(pa + 2 * i));
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  double s = hsum4(acc);
  for (; i < n; ++i) {
    const double r = a[i].real(), im = a[i].imag();
    s += r * r + im * im;
  }
  return s;
}

void v_tv_shrink(cfloat* gx, cfloat* gy, float t, std::size_t n) {
  std::size_t i = 0;
  auto* px = reinterpret_cast<float*>(gx);
  auto* py = reinterpret_cast<float*>(gy);
  const __m256i pair_idx = _mm256_setr_epi32(0, 0, 1, 1, 2, 2, 3, 3);
  const __m128 vt = _mm_set1_ps(t);
  for (; i + 4 <= n; i += 4) {
    __m256 vx = _mm256_loadu_ps(px + 2 * i);
    __m256 vy = _mm256_loadu_ps(py + 2 * i);
    __m128 mag2 = _mm_add_ps(pair_sum(_mm256_mul_ps(vx, vx)), pair_sum(_mm256_mul_ps(vy, vy)));
    __m128 mag = _mm_sqrt_ps(mag2);
    __m128 f = _mm_div_ps(_mm_sub_ps(mag, vt), mag);
    f = _mm_and_ps(f, _mm_cmpgt_ps(mag, vt));  // 0 where mag <= t (also kills 0/0)
    __m256 f2 = _mm256_set_m128(f, f);
    __m256 f8 = _mm256_permutevar8x32_ps(f2, pair_idx);
    _mm256_storeu_ps(px + 2 * i, _mm256_mul_ps(vx, f8));
    _mm256_storeu_ps(py + 2 * i, _mm256_mul_ps(vy, f8));
  }
  for (; i < n; ++i) {
    const float xr = gx[i].real(), xi = gx[i].imag();
    const float yr = gy[i].real(), yi = gy[i].imag();
    const float mag = std::sqrt(xr * xr + xi * xi + yr * yr + yi * yi);
    const float f = mag > t ? (mag - t) / mag : 0.0f;
    gx[i] = cfloat(xr * f, xi * f);
    gy[i] = cfloat(yr * f, yi * f);
  }
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k = {v_cmul, v_cmul_conj_acc, v_csub,  v_caxpy, v_scale,
                            v_mask_mul, v_abs2_acc,  v_cdotc, v_norm2, v_tv_shrink,
                            "avx2"};
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &k : nullptr;
}

}  // namespace ksb::simd

#else  // no AVX2 in this build

namespace ksb::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace ksb::simd

#endif
