#pragma once

#include <cstdint>

#include "tvr/image.hpp"

namespace tvr {

struct SyntheticImage {
  Image image;
  std::int64_t gradient_support = 0;  // nonzero gradient entries of image
};

/// Piecewise-constant test image built by painting s random axis-aligned
/// rectangles with uniform [0, 1) levels over a zero background.
/// Deterministic per seed. Requires s <= N.
SyntheticImage synthetic_gradient_sparse(Index n, int s, std::uint64_t seed);

}  // namespace tvr
