#include "ksb/cxa.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace ksb {

namespace {

constexpr char kMagic[4] = {'C', 'X', 'A', '1'};

static_assert(std::endian::native == std::endian::little,
              "CXA payload writing assumes a little-endian host");
static_assert(sizeof(cfloat) == 8, "complex64 must be two packed float32");

void put_u64_le(std::ofstream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64_le(std::ifstream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

void write_header(std::ofstream& os, Dtype dtype, const std::vector<std::size_t>& dims) {
  os.write(kMagic, 4);
  char code = static_cast<char>(dtype);
  char ndim = static_cast<char>(dims.size());
  os.write(&code, 1);
  os.write(&ndim, 1);
  for (auto d : dims) put_u64_le(os, d);
}

template <typename T>
void write_payload(const std::filesystem::path& path, Dtype dtype, const NDArray<T>& a) {
  if (dim_product(a.dims) != a.data.size())
    throw std::invalid_argument("cxa write: dims " + shape_string(a.dims) +
                                " do not match sample count " + std::to_string(a.data.size()));
  if (a.dims.size() > 255) throw std::invalid_argument("cxa write: too many dimensions");
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cxa write: cannot open " + path.string());
  write_header(os, dtype, a.dims);
  os.write(reinterpret_cast<const char*>(a.data.data()),
           static_cast<std::streamsize>(a.data.size() * sizeof(T)));
  if (!os) throw std::runtime_error("cxa write: I/O failure on " + path.string());
}

}  // namespace

const std::vector<std::size_t>& CxaFile::dims() const {
  return std::visit([](const auto& a) -> const std::vector<std::size_t>& { return a.dims; },
                    array);
}

void write_cxa(const ComplexArray& a, const std::filesystem::path& path) {
  for (const auto& v : a.data)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("cxa write: non-finite sample in complex payload");
  write_payload(path, Dtype::complex64, a);
}

void write_cxa(const RealArray& a, const std::filesystem::path& path) {
  for (float v : a.data)
    if (!std::isfinite(v)) throw std::invalid_argument("cxa write: non-finite sample in payload");
  write_payload(path, Dtype::float32, a);
}

void write_cxa(const MaskArray& a, const std::filesystem::path& path) {
  for (auto v : a.data)
    if (v != 0 && v != 1)
      throw std::invalid_argument("cxa write: mask element is not 0 or 1");
  write_payload(path, Dtype::mask_u8, a);
}

CxaFile read_cxa(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cxa read: cannot open " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("cxa read: bad magic in " + path.string());
  char code = 0, ndim = 0;
  is.read(&code, 1);
  is.read(&ndim, 1);
  if (!is) throw std::runtime_error("cxa read: truncated header in " + path.string());
  std::vector<std::size_t> dims(static_cast<unsigned char>(ndim));
  for (auto& d : dims) {
    d = static_cast<std::size_t>(get_u64_le(is));
    if (!is) throw std::runtime_error("cxa read: truncated header in " + path.string());
  }
  const std::size_t n = dim_product(dims);

  auto read_exact = [&](void* dst, std::size_t bytes) {
    is.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(bytes));
    if (static_cast<std::size_t>(is.gcount()) != bytes)
      throw std::runtime_error("cxa read: truncated payload in " + path.string());
  };

  CxaFile out;
  switch (code) {
    case static_cast<char>(Dtype::complex64): {
      ComplexArray a(dims);
      if (n) read_exact(a.data.data(), n * sizeof(cfloat));
      for (const auto& v : a.data)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          out.has_nonfinite = true;
          break;
        }
      out.dtype = Dtype::complex64;
      out.array = std::move(a);
      break;
    }
    case static_cast<char>(Dtype::float32): {
      RealArray a(dims);
      if (n) read_exact(a.data.data(), n * sizeof(float));
      for (float v : a.data)
        if (!std::isfinite(v)) {
          out.has_nonfinite = true;
          break;
        }
      out.dtype = Dtype::float32;
      out.array = std::move(a);
      break;
    }
    case static_cast<char>(Dtype::mask_u8): {
      MaskArray a(dims);
      if (n) read_exact(a.data.data(), n);
      out.dtype = Dtype::mask_u8;
      out.array = std::move(a);
      break;
    }
    default:
      throw std::runtime_error("cxa read: unknown dtype code " +
                               std::to_string(static_cast<int>(code)) + " in " + path.string());
  }
  return out;
}

ComplexArray read_cxa_complex(const std::filesystem::path& path) {
  CxaFile f = read_cxa(path);
  if (f.dtype != Dtype::complex64)
    throw std::runtime_error("cxa read: expected complex64 in " + path.string());
  return std::get<ComplexArray>(std::move(f.array));
}

RealArray read_cxa_real(const std::filesystem::path& path) {
  CxaFile f = read_cxa(path);
  if (f.dtype != Dtype::float32)
    throw std::runtime_error("cxa read: expected float32 in " + path.string());
  return std::get<RealArray>(std::move(f.array));
}

MaskArray read_cxa_mask(const std::filesystem::path& path) {
  CxaFile f = read_cxa(path);
  if (f.dtype != Dtype::mask_u8)
    throw std::runtime_error("cxa read: expected mask in " + path.string());
  return std::get<MaskArray>(std::move(f.array));
}

}  // namespace ksb
