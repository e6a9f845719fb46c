#pragma once

#include <cstddef>

#include "ksb/array.hpp"

namespace ksb {

// Centered orthonormal 2-D DFT: DC sits at (ky/2, kx/2), scaling is 1/sqrt(N)
// in both directions, so ifft2c(fft2c(x)) == x and energy is preserved.
// Operates in place on `batch` contiguous ky-by-kx slices.
void fft2c(cfloat* data, std::size_t batch, std::size_t ky, std::size_t kx);
void ifft2c(cfloat* data, std::size_t batch, std::size_t ky, std::size_t kx);

// Last two dims are (ky, kx); leading dims form the batch.
void fft2c(ComplexArray& a);
void ifft2c(ComplexArray& a);

}  // namespace ksb
