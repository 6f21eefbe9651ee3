#include "tvr/haar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tvr/gradient.hpp"

namespace tvr {

bool WaveletIndex::valid(int n) const {
  if (kind == Kind::dc) return n >= 0;
  if (level < 0 || level >= n) return false;
  const int t = 1 << level;
  return k_row >= 0 && k_row < t && k_col >= 0 && k_col < t;
}

std::vector<WaveletIndex> all_wavelet_indices(int n) {
  std::vector<WaveletIndex> out;
  out.reserve(std::size_t{1} << (2 * n));
  out.push_back(WaveletIndex{});
  for (int j = 0; j < n; ++j) {
    const int t = 1 << j;
    for (auto kind : {WaveletIndex::Kind::e01, WaveletIndex::Kind::e10, WaveletIndex::Kind::e11})
      for (int kr = 0; kr < t; ++kr)
        for (int kc = 0; kc < t; ++kc) out.push_back(WaveletIndex{kind, j, kr, kc});
  }
  return out;
}

std::pair<Index, Index> coeff_position(const WaveletIndex& idx, int n) {
  if (!idx.valid(n)) throw std::invalid_argument("coeff_position: index out of range");
  if (idx.kind == WaveletIndex::Kind::dc) return {0, 0};
  const Index t = Index{1} << idx.level;
  switch (idx.kind) {
    case WaveletIndex::Kind::e01: return {idx.k_row, t + idx.k_col};
    case WaveletIndex::Kind::e10: return {t + idx.k_row, idx.k_col};
    default: return {t + idx.k_row, t + idx.k_col};
  }
}

static void require_pow2_square(const CMat& x, const char* who) {
  if (x.rows() != x.cols() || !is_power_of_two(x.rows()))
    throw std::invalid_argument(std::string(who) + ": need a square 2^n x 2^n grid");
}

// One analysis sweep per scale: each 2x2 block (a b; c d) of the running
// low-pass grid maps to
//   ll = (a+b+c+d)/2   dc path
//   (a-b+c-d)/2        e=(0,1), column sign flips
//   (a+b-c-d)/2        e=(1,0), row sign flips
//   (a-b-c+d)/2        e=(1,1)
// which reproduces the inner products against the basis images exactly.
CMat haar_forward_mat(const CMat& x) {
  require_pow2_square(x, "haar_forward");
  CMat w = x;
  for (Index m = x.rows(); m > 1; m /= 2) {
    const Index h = m / 2;
    CMat blk = w.topLeftCorner(m, m);
    for (Index r = 0; r < h; ++r) {
      for (Index c = 0; c < h; ++c) {
        const Complex a = blk(2 * r, 2 * c), b = blk(2 * r, 2 * c + 1);
        const Complex cc = blk(2 * r + 1, 2 * c), d = blk(2 * r + 1, 2 * c + 1);
        w(r, c) = (a + b + cc + d) / 2.0;
        w(r, h + c) = (a - b + cc - d) / 2.0;
        w(h + r, c) = (a + b - cc - d) / 2.0;
        w(h + r, h + c) = (a - b - cc + d) / 2.0;
      }
    }
  }
  return w;
}

CMat haar_inverse_mat(const CMat& c) {
  require_pow2_square(c, "haar_inverse");
  CMat w = c;
  for (Index m = 2; m <= c.rows(); m *= 2) {
    const Index h = m / 2;
    CMat blk = w.topLeftCorner(m, m);
    for (Index r = 0; r < h; ++r) {
      for (Index cc = 0; cc < h; ++cc) {
        const Complex ll = blk(r, cc), ch = blk(r, h + cc);
        const Complex cv = blk(h + r, cc), cd = blk(h + r, h + cc);
        w(2 * r, 2 * cc) = (ll + ch + cv + cd) / 2.0;
        w(2 * r, 2 * cc + 1) = (ll - ch + cv - cd) / 2.0;
        w(2 * r + 1, 2 * cc) = (ll + ch - cv - cd) / 2.0;
        w(2 * r + 1, 2 * cc + 1) = (ll - ch - cv + cd) / 2.0;
      }
    }
  }
  return w;
}

HaarCoeffs haar_forward(const Image& x) {
  HaarCoeffs out;
  out.levels = log2_exact(x.rows());
  if (!x.is_square()) throw std::invalid_argument("haar_forward: image not square");
  out.coeffs = haar_forward_mat(x.mat());
  return out;
}

Image haar_inverse(const HaarCoeffs& c) {
  if (c.coeffs.rows() != (Index{1} << c.levels))
    throw std::invalid_argument("haar_inverse: layout size mismatch");
  return Image(haar_inverse_mat(c.coeffs));
}

double wavelet_value(const WaveletIndex& idx, int n, Index r, Index c) {
  const Index big_n = Index{1} << n;
  if (r < 0 || r >= big_n || c < 0 || c >= big_n)
    throw std::invalid_argument("wavelet_value: pixel out of range");
  if (!idx.valid(n)) throw std::invalid_argument("wavelet_value: index out of range");
  if (idx.kind == WaveletIndex::Kind::dc) return 1.0 / static_cast<double>(big_n);
  const Index side = big_n >> idx.level;  // 2^(n-j)
  const Index r0 = idx.k_row * side, c0 = idx.k_col * side;
  if (r < r0 || r >= r0 + side || c < c0 || c >= c0 + side) return 0.0;
  const double mag = std::ldexp(1.0, idx.level - n);  // 2^(j-n)
  double s = 1.0;
  const bool flip_rows =
      idx.kind == WaveletIndex::Kind::e10 || idx.kind == WaveletIndex::Kind::e11;
  const bool flip_cols =
      idx.kind == WaveletIndex::Kind::e01 || idx.kind == WaveletIndex::Kind::e11;
  if (flip_rows && (r - r0) >= side / 2) s = -s;
  if (flip_cols && (c - c0) >= side / 2) s = -s;
  return s * mag;
}

Image wavelet_image(const WaveletIndex& idx, int n) {
  const Index big_n = Index{1} << n;
  if (!idx.valid(n)) throw std::invalid_argument("wavelet_image: index out of range");
  CMat h = CMat::Zero(big_n, big_n);
  if (idx.kind == WaveletIndex::Kind::dc) {
    h.setConstant(1.0 / static_cast<double>(big_n));
    return Image(std::move(h));
  }
  const Index side = big_n >> idx.level;
  const Index r0 = idx.k_row * side, c0 = idx.k_col * side;
  for (Index r = r0; r < r0 + side; ++r)
    for (Index c = c0; c < c0 + side; ++c) h(r, c) = wavelet_value(idx, n, r, c);
  return Image(std::move(h));
}

std::vector<double> sorted_coeff_magnitudes(const HaarCoeffs& c) {
  std::vector<double> mags(static_cast<std::size_t>(c.coeffs.size()));
  for (Index i = 0; i < c.coeffs.size(); ++i)
    mags[static_cast<std::size_t>(i)] = std::abs(c.coeffs.data()[i]);
  std::sort(mags.begin(), mags.end(), std::greater<double>());
  return mags;
}

double haar_decay_constant() {
  return 36.0 * (480.0 * std::sqrt(5.0) + 168.0 * std::sqrt(3.0));
}

double decay_ratio(const Image& x) {
  const double tv = tv_norm(x, TvMode::anisotropic);
  if (tv == 0.0) throw std::domain_error("decay_ratio: constant image has TV = 0");
  const auto mags = sorted_coeff_magnitudes(haar_forward(x));
  double worst = 0.0;
  for (std::size_t k = 0; k < mags.size(); ++k)
    worst = std::max(worst, static_cast<double>(k + 1) * mags[k]);
  return worst / tv;
}

int edge_nonconstant_count(Index r1, Index c1, Index r2, Index c2, int n) {
  const Index big_n = Index{1} << n;
  const bool horizontal = (r1 == r2) && (std::abs(c1 - c2) == 1);
  const bool vertical = (c1 == c2) && (std::abs(r1 - r2) == 1);
  if (!horizontal && !vertical)
    throw std::invalid_argument("edge_nonconstant_count: pixels not adjacent");
  if (r1 < 0 || r1 >= big_n || c1 < 0 || c1 >= big_n || r2 < 0 || r2 >= big_n || c2 < 0 ||
      c2 >= big_n)
    throw std::invalid_argument("edge_nonconstant_count: pixel out of range");
  int count = 0;
  for (const auto& idx : all_wavelet_indices(n))
    count += (wavelet_value(idx, n, r1, c1) != wavelet_value(idx, n, r2, c2));
  return count;
}

double wavelet_gradient_l1(const WaveletIndex& idx, int n) {
  return tv_norm(wavelet_image(idx, n), TvMode::anisotropic);
}

}  // namespace tvr
