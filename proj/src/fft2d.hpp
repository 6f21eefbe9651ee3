#pragma once

// Internal: unitary 2-D DFT on row-major complex grids, backed by FFTW.
// Plans are cached per (rows, cols, direction) behind a mutex; execution
// uses the new-array interface so concurrent transforms on distinct
// buffers are safe.

#include "tvr/image.hpp"

namespace tvr::detail {

// out = DFT2(in) / sqrt(rows * cols); inverse applies the conjugate scaling.
CMat fft2d_unitary(const CMat& in, bool inverse);

}  // namespace tvr::detail
