#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ksb {

using cfloat = std::complex<float>;

// On-disk dtype codes of the CXA container.
enum class Dtype : std::uint8_t { complex64 = 1, float32 = 2, mask_u8 = 3 };

inline std::size_t dim_product(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

// Dense row-major n-d array (slowest-varying dimension first).
template <typename T>
struct NDArray {
  std::vector<std::size_t> dims;
  std::vector<T> data;

  NDArray() = default;
  explicit NDArray(std::vector<std::size_t> d) : dims(std::move(d)), data(dim_product(dims)) {}
  NDArray(std::vector<std::size_t> d, T fill)
      : dims(std::move(d)), data(dim_product(dims), fill) {}

  std::size_t size() const { return data.size(); }
  std::size_t ndim() const { return dims.size(); }

  std::size_t dim(std::size_t i) const { return dims.at(i); }

  T& operator[](std::size_t i) { return data[i]; }
  const T& operator[](std::size_t i) const { return data[i]; }

  T& at2(std::size_t i, std::size_t j) { return data[i * dims[1] + j]; }
  const T& at2(std::size_t i, std::size_t j) const { return data[i * dims[1] + j]; }

  T& at3(std::size_t i, std::size_t j, std::size_t k) {
    return data[(i * dims[1] + j) * dims[2] + k];
  }
  const T& at3(std::size_t i, std::size_t j, std::size_t k) const {
    return data[(i * dims[1] + j) * dims[2] + k];
  }

  T& at4(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data[((i * dims[1] + j) * dims[2] + k) * dims[3] + l];
  }
  const T& at4(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data[((i * dims[1] + j) * dims[2] + k) * dims[3] + l];
  }

  bool same_shape(const NDArray& o) const { return dims == o.dims; }
};

using ComplexArray = NDArray<cfloat>;
using RealArray = NDArray<float>;
using MaskArray = NDArray<std::uint8_t>;

inline std::string shape_string(const std::vector<std::size_t>& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + "]";
}

inline void require_shape(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("extent mismatch: " + what);
}

}  // namespace ksb
