#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace tvr {

using Complex = std::complex<double>;

// Pixel grids are stored row-major so that vectorized images, operator
// descriptors and file formats all share one canonical entry order.
using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Index = Eigen::Index;

/// An n_rows x n_cols grid of pixel intensities, real or complex valued.
/// Construction rejects NaN/Inf entries; everything downstream may assume
/// finite pixels.
class Image {
 public:
  Image() = default;

  Image(Index rows, Index cols) : pixels_(CMat::Zero(rows, cols)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("Image: empty shape");
  }

  explicit Image(CMat pixels) : pixels_(std::move(pixels)) {
    if (pixels_.size() == 0) throw std::invalid_argument("Image: empty matrix");
    if (!pixels_.allFinite()) throw std::invalid_argument("Image: non-finite pixel");
  }

  static Image from_real(const RMat& m) { return Image(m.cast<Complex>()); }

  Index rows() const { return pixels_.rows(); }
  Index cols() const { return pixels_.cols(); }
  Index size() const { return pixels_.size(); }

  Complex& operator()(Index r, Index c) { return pixels_(r, c); }
  const Complex& operator()(Index r, Index c) const { return pixels_(r, c); }

  const CMat& mat() const { return pixels_; }
  CMat& mat() { return pixels_; }

  double norm() const { return pixels_.norm(); }  // Frobenius
  Complex mean() const { return pixels_.mean(); }

  bool is_square() const { return rows() == cols(); }
  bool is_real(double tol = 0.0) const {
    return (pixels_.imag().cwiseAbs().maxCoeff() <= tol);
  }
  RMat real_part() const { return pixels_.real(); }

 private:
  CMat pixels_;
};

/// trace(a b*) evaluated entrywise: sum of a_{jk} * conj(b_{jk}).
inline Complex inner_product(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("inner_product: shape mismatch");
  return (a.array() * b.array().conjugate()).sum();
}

inline Complex inner_product(const Image& a, const Image& b) {
  return inner_product(a.mat(), b.mat());
}

inline bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

inline int log2_exact(Index n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("log2_exact: not a power of two");
  int k = 0;
  while ((Index{1} << k) < n) ++k;
  return k;
}

/// Row-major flattening shared by all vectorized views of an image.
inline CVec vectorize(const CMat& x) {
  return Eigen::Map<const CVec>(x.data(), x.size());
}

inline CMat unvectorize(const CVec& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvectorize: size mismatch");
  return Eigen::Map<const CMat>(v.data(), rows, cols);
}

}  // namespace tvr
