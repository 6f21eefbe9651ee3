#pragma once

#include "tvr/image.hpp"

namespace tvr {

struct PhantomEllipse {
  double intensity;  // additive
  double a, b;       // semi-axes
  double x0, y0;     // center, unit square coordinates in [-1, 1]
  double phi_deg;    // rotation, degrees counterclockwise
};

/// The frozen ten-ellipse head phantom parameter table (high-contrast
/// variant) used by the experiment harness.
const std::vector<PhantomEllipse>& phantom_ellipses();

/// Rasterize the ten-ellipse head phantom at N x N: pixel centers sampled
/// on [-1, 1]^2, ellipse intensities summed, result clamped to [0, 1].
/// Deterministic. Requires N >= 16.
Image phantom(Index n);

}  // namespace tvr
