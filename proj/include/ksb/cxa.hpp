#pragma once

#include <filesystem>
#include <variant>

#include "ksb/array.hpp"

namespace ksb {

// CXA container: magic "CXA1", 1 byte dtype (1=complex64, 2=float32,
// 3=uint8 mask), 1 byte ndim, ndim little-endian u64 extents, raw
// little-endian row-major payload, complex samples interleaved (re, im).
// File size is exactly 6 + 8*ndim + payload bytes.

struct CxaFile {
  Dtype dtype;
  std::variant<ComplexArray, RealArray, MaskArray> array;
  // Writers reject NaN/Inf; readers load the payload and raise this flag
  // instead, so validity checking downstream can classify the failure.
  bool has_nonfinite = false;

  const std::vector<std::size_t>& dims() const;
};

void write_cxa(const ComplexArray& a, const std::filesystem::path& path);
void write_cxa(const RealArray& a, const std::filesystem::path& path);
void write_cxa(const MaskArray& a, const std::filesystem::path& path);

CxaFile read_cxa(const std::filesystem::path& path);

// Convenience accessors that throw on dtype mismatch.
ComplexArray read_cxa_complex(const std::filesystem::path& path);
RealArray read_cxa_real(const std::filesystem::path& path);
MaskArray read_cxa_mask(const std::filesystem::path& path);

}  // namespace ksb
