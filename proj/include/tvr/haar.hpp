#pragma once

#include <vector>

#include "tvr/image.hpp"

namespace tvr {

/// Index of one element of the discrete bivariate Haar basis for N = 2^n.
/// kind dc is the constant basis image. Detail wavelets carry a sign pattern
/// e in {(0,1), (1,0), (1,1)} (which axes flip sign), a level j in [0, n)
/// (support side 2^(n-j) pixels; j = 0 spans the whole grid) and a translate
/// k = (k_row, k_col) with both components in [0, 2^j).
struct WaveletIndex {
  enum class Kind { dc, e01, e10, e11 };
  Kind kind = Kind::dc;
  int level = 0;
  int k_row = 0;
  int k_col = 0;

  bool valid(int n) const;
};

/// All N^2 basis indices in the canonical layout order.
std::vector<WaveletIndex> all_wavelet_indices(int n);

/// Bivariate Haar coefficients of an N x N image, N = 2^n, stored
/// in the canonical layout: the dc coefficient at (0,0) and, for each level
/// j, three 2^j x 2^j detail blocks at row/col offsets
///   (0, 2^j) for e=(0,1),  (2^j, 0) for e=(1,0),  (2^j, 2^j) for e=(1,1),
/// translates in row-major position within each block.
struct HaarCoeffs {
  int levels = 0;  // n
  CMat coeffs;

  Index n() const { return coeffs.rows(); }
  double norm() const { return coeffs.norm(); }
};

/// Position of a basis index inside the canonical coefficient layout.
std::pair<Index, Index> coeff_position(const WaveletIndex& idx, int n);

HaarCoeffs haar_forward(const Image& x);
Image haar_inverse(const HaarCoeffs& c);

/// Same transforms on raw coefficient grids, for operator composition.
CMat haar_forward_mat(const CMat& x);
CMat haar_inverse_mat(const CMat& c);

/// The discrete basis image for one index: unit l2 norm, piecewise constant
/// of magnitude 2^(j-n) on a dyadic square of side 2^(n-j) pixels, sign
/// +1 on the first half and -1 on the second half along each flipped axis.
Image wavelet_image(const WaveletIndex& idx, int n);

/// Value of the basis image at one pixel, in O(1).
double wavelet_value(const WaveletIndex& idx, int n, Index r, Index c);

/// Coefficient magnitudes sorted in non-increasing order (length N^2).
std::vector<double> sorted_coeff_magnitudes(const HaarCoeffs& c);

/// Decay constant of Haar coefficients against total variation:
/// 36 (480 sqrt(5) + 168 sqrt(3)), approximately 49114.7.
double haar_decay_constant();

/// max_k k |c_(k)| / ||x||_TV. Throws if the image is constant (TV = 0).
double decay_ratio(const Image& x);

/// Number of basis images taking different values on two adjacent pixels.
/// Always at most 6n.
int edge_nonconstant_count(Index r1, Index c1, Index r2, Index c2, int n);

/// Anisotropic TV of the basis image; at most 8 for every index.
double wavelet_gradient_l1(const WaveletIndex& idx, int n);

}  // namespace tvr
