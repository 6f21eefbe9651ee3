#pragma once

#include <cstdint>

#include "tvr/image.hpp"

namespace tvr {

enum class TvMode { anisotropic, isotropic };

/// Forward-difference field of an image, stored zero-padded to the image
/// shape: gx holds vertical differences with its last row forced to zero,
/// gy horizontal differences with its last column forced to zero.
struct GradientField {
  CMat gx;
  CMat gy;

  Index rows() const { return gx.rows(); }
  Index cols() const { return gx.cols(); }

  double l1_norm() const;
  double l2_norm() const;
};

/// Vertical differences X_{j+1,k} - X_{j,k}, shape (R-1) x C.
CMat row_diff(const CMat& x);
/// Horizontal differences X_{j,k+1} - X_{j,k}, shape R x (C-1).
CMat col_diff(const CMat& x);

GradientField discrete_gradient(const Image& x);
GradientField discrete_gradient(const CMat& x);

/// Adjoint of discrete_gradient (negative divergence with the boundary
/// convention fixed by the adjoint identity <grad x, g> = <x, adjoint g>).
CMat gradient_adjoint(const GradientField& g);

double tv_norm(const CMat& x, TvMode mode = TvMode::anisotropic);
double tv_norm(const Image& x, TvMode mode = TvMode::anisotropic);

/// l1 norm of the gradient after removing its s largest-magnitude entries.
/// Ties are broken by canonical entry order (gx row-major, then gy), so the
/// result is deterministic.
double best_s_term_gradient_error(const Image& x, std::int64_t s);

/// Number of nonzero entries of the gradient field.
std::int64_t gradient_support_size(const Image& x);

}  // namespace tvr
