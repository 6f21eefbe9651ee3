#pragma once

#include <filesystem>

#include "tvr/image.hpp"

namespace tvr {

/// Writes the real part of an image as 16-bit binary PGM (P5, maxval 65535,
/// big-endian samples) with linear scaling from [min, max] to the full
/// sample range. The scaling endpoints are recorded in a JSON sidecar at
/// <path>.json so values can be recovered exactly up to quantization. Both
/// files are written atomically (temp file + rename).
void write_pgm16(const std::filesystem::path& path, const Image& img);

/// Reads a 16-bit P5 file written by write_pgm16, applying the sidecar
/// scaling when present (raw samples mapped to [0, 1] otherwise).
Image read_pgm16(const std::filesystem::path& path);

}  // namespace tvr
