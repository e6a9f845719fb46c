#include <cstdlib>
#include <cstring>

#include "ksb/simd.hpp"

namespace ksb::simd {

namespace {

const Kernels& pick() {
  const char* env = std::getenv("KSPACE_BENCH_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return scalar_kernels();
  const Kernels* v = avx2_kernels();
  if (env && std::strcmp(env, "avx2") == 0) return v ? *v : scalar_kernels();
  return v ? *v : scalar_kernels();
}

}  // namespace

const Kernels& active() {
  static const Kernels& k = pick();
  return k;
}

}  // namespace ksb::simd
