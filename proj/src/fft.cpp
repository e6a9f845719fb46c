#include "ksb/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace ksb {

namespace {

// FFTW plan creation is not thread-safe; execution via fftwf_execute_dft on
// caller-owned buffers is. Plans are cached per (ky, kx, sign) and created
// with FFTW_ESTIMATE so planning is deterministic run to run.
class PlanCache {
 public:
  fftwf_plan get(std::size_t ky, std::size_t kx, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_tuple(ky, kx, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<fftwf_complex> in(ky * kx), out(ky * kx);
    fftwf_plan p = fftwf_plan_dft_2d(static_cast<int>(ky), static_cast<int>(kx), in.data(),
                                     out.data(), sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    plans_.emplace(key, p);
    return p;
  }

  static PlanCache& instance() {
    static PlanCache c;
    return c;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<std::size_t, std::size_t, int>, fftwf_plan> plans_;
};

// dst[(i + shift) % n_rows outer, ...] handled per axis via index maps.
inline std::size_t rolled(std::size_t i, std::size_t shift, std::size_t n) {
  return (i + shift) % n;
}

// One centered transform: scatter(ifftshift) -> FFT -> gather(fftshift) -> scale.
void centered_2d(cfloat* slice, std::size_t ky, std::size_t kx, int sign) {
  fftwf_plan plan = PlanCache::instance().get(ky, kx, sign);
  const std::size_t n = ky * kx;
  std::vector<cfloat> in(n), out(n);
  // ifftshift: index 0 of the work buffer receives the centered DC sample
  const std::size_t sy_in = ky - ky / 2, sx_in = kx - kx / 2;  // roll by -floor(n/2)
  for (std::size_t y = 0; y < ky; ++y) {
    const std::size_t yy = rolled(y, sy_in, ky);
    for (std::size_t x = 0; x < kx; ++x) in[yy * kx + rolled(x, sx_in, kx)] = slice[y * kx + x];
  }
  fftwf_execute_dft(plan, reinterpret_cast<fftwf_complex*>(in.data()),
                    reinterpret_cast<fftwf_complex*>(out.data()));
  // fftshift + orthonormal scaling
  const float scale = 1.0f / std::sqrt(static_cast<float>(n));
  const std::size_t sy_out = ky / 2, sx_out = kx / 2;
  for (std::size_t y = 0; y < ky; ++y) {
    const std::size_t yy = rolled(y, sy_out, ky);
    for (std::size_t x = 0; x < kx; ++x)
      slice[yy * kx + rolled(x, sx_out, kx)] = out[y * kx + x] * scale;
  }
}

void run_batch(cfloat* data, std::size_t batch, std::size_t ky, std::size_t kx, int sign) {
  if (ky == 0 || kx == 0) throw std::invalid_argument("fft2c: empty extents");
  for (std::size_t b = 0; b < batch; ++b) centered_2d(data + b * ky * kx, ky, kx, sign);
}

void run_array(ComplexArray& a, int sign) {
  if (a.ndim() < 2) throw std::invalid_argument("fft2c: need at least 2 dims");
  const std::size_t kx = a.dims[a.ndim() - 1];
  const std::size_t ky = a.dims[a.ndim() - 2];
  run_batch(a.data.data(), a.size() / (ky * kx), ky, kx, sign);
}

}  // namespace

void fft2c(cfloat* data, std::size_t batch, std::size_t ky, std::size_t kx) {
  run_batch(data, batch, ky, kx, FFTW_FORWARD);
}

void ifft2c(cfloat* data, std::size_t batch, std::size_t ky, std::size_t kx) {
  run_batch(data, batch, ky, kx, FFTW_BACKWARD);
}

void fft2c(ComplexArray& a) { run_array(a, FFTW_FORWARD); }
void ifft2c(ComplexArray& a) { run_array(a, FFTW_BACKWARD); }

}  // namespace ksb
