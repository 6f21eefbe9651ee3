#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tvr/image.hpp"

namespace tvr {

using json_t = nlohmann::json;

struct Shape {
  Index rows = 0;
  Index cols = 0;
  Index size() const { return rows * cols; }
  bool operator==(const Shape&) const = default;
};

/// A linear map from images of a fixed shape to C^m, with its adjoint.
/// Implementations are immutable after construction; apply/adjoint are pure
/// and safe to call concurrently. Randomness is confined to construction
/// under an explicit seed, and the descriptor records everything needed to
/// rebuild the operator exactly.
class MeasurementOp {
 public:
  virtual ~MeasurementOp() = default;

  virtual Index m() const = 0;
  virtual Shape input_shape() const = 0;
  virtual std::string kind() const = 0;

  virtual CVec apply(const CMat& x) const = 0;
  virtual CMat adjoint(const CVec& y) const = 0;

  CVec apply(const Image& x) const { return apply(x.mat()); }

  virtual json_t descriptor() const = 0;

 protected:
  void check_input(const CMat& x) const {
    const Shape s = input_shape();
    if (x.rows() != s.rows || x.cols() != s.cols)
      throw std::invalid_argument(kind() + ": input shape mismatch");
  }
  void check_output(const CVec& y) const {
    if (y.size() != m()) throw std::invalid_argument(kind() + ": output size mismatch");
  }
};

using OpPtr = std::shared_ptr<const MeasurementOp>;

/// Explicit matrix acting on vectorized (row-major) images.
class DenseOp : public MeasurementOp {
 public:
  DenseOp(CMat matrix, Shape input_shape);

  Index m() const override { return matrix_.rows(); }
  Shape input_shape() const override { return shape_; }
  std::string kind() const override { return "dense"; }
  CVec apply(const CMat& x) const override;
  CMat adjoint(const CVec& y) const override;
  json_t descriptor() const override;

  const CMat& matrix() const { return matrix_; }

 private:
  CMat matrix_;
  Shape shape_;
};

/// Dense i.i.d. Normal(0, 1/m) real matrix on vectorized images.
class GaussianOp : public MeasurementOp {
 public:
  GaussianOp(Index m, Index rows, Index cols, std::uint64_t seed);

  Index m() const override { return matrix_.rows(); }
  Shape input_shape() const override { return shape_; }
  std::string kind() const override { return "gaussian"; }
  CVec apply(const CMat& x) const override;
  CMat adjoint(const CVec& y) const override;
  json_t descriptor() const override;

  const RMat& matrix() const { return matrix_; }
  std::uint64_t seed() const { return seed_; }

 private:
  RMat matrix_;
  Shape shape_;
  std::uint64_t seed_;
};

/// Random m-row restriction of the unitary 2-D DFT composed with a random
/// +-1 pixel sign diagonal, rows rescaled by sqrt(N^2/m) so full sampling is
/// an isometry. Matrix free. signs_enabled = false gives the plain
/// uniformly subsampled DFT with no sign randomization.
class FourierSignedOp : public MeasurementOp {
 public:
  FourierSignedOp(Index m, Index n, std::uint64_t seed, bool signs_enabled = true);

  Index m() const override { return static_cast<Index>(omega_.size()); }
  Shape input_shape() const override { return {n_, n_}; }
  std::string kind() const override { return signs_enabled_ ? "fourier_signed" : "fourier_plain"; }
  CVec apply(const CMat& x) const override;
  CMat adjoint(const CVec& y) const override;
  json_t descriptor() const override;

  const std::vector<int>& omega() const { return omega_; }
  const RMat& signs() const { return signs_; }

 private:
  Index n_;
  std::uint64_t seed_;
  bool signs_enabled_;
  std::vector<int> omega_;  // ascending row indices into the flattened DFT
  RMat signs_;
  double scale_;
};

/// Five-block gradient-probing measurement map on N x N images:
///   ( A(X drop first row), A(X drop last row),
///     A'(X^T drop first row), A'(X^T drop last row), B(X) )
/// where A, A' act on (N-1) x N and B on N x N. The first four blocks
/// realize the zero-padded row-matrix measurements, so block differences
/// probe the directional derivatives. m = 4 m1 + m2.
class CompositeTVOp : public MeasurementOp {
 public:
  CompositeTVOp(OpPtr a, OpPtr a_prime, OpPtr b);

  Index m() const override { return 4 * m1_ + m2_; }
  Shape input_shape() const override { return {n_, n_}; }
  std::string kind() const override { return "composite_tv"; }
  CVec apply(const CMat& x) const override;
  CMat adjoint(const CVec& y) const override;
  json_t descriptor() const override;

  Index m1() const { return m1_; }
  Index m2() const { return m2_; }
  const MeasurementOp& a() const { return *a_; }
  const MeasurementOp& a_prime() const { return *a_prime_; }
  const MeasurementOp& b() const { return *b_; }

 private:
  OpPtr a_, a_prime_, b_;
  Index n_, m1_, m2_;
};

/// c -> op(haar_inverse(c)): the measurement map in Haar coefficient
/// coordinates. The adjoint is haar_forward composed with op's adjoint.
class HaarComposedOp : public MeasurementOp {
 public:
  explicit HaarComposedOp(OpPtr inner);

  Index m() const override { return inner_->m(); }
  Shape input_shape() const override { return inner_->input_shape(); }
  std::string kind() const override { return "haar_composed"; }
  CVec apply(const CMat& c) const override;
  CMat adjoint(const CVec& y) const override;
  json_t descriptor() const override;

  const MeasurementOp& inner() const { return *inner_; }

 private:
  OpPtr inner_;
};

OpPtr gaussian_op(Index m, Index rows, Index cols, std::uint64_t seed);
OpPtr fourier_signed_op(Index m, Index n, std::uint64_t seed, bool signs_enabled = true);
OpPtr composite_tv_op(OpPtr a, OpPtr a_prime, OpPtr b);
OpPtr compose_with_inverse_haar(OpPtr op);
OpPtr dense_op(CMat matrix, Shape input_shape);

/// Rebuild an operator from its JSON descriptor. Dense operators with
/// explicit matrices are not replayable and are rejected.
OpPtr op_from_descriptor(const json_t& desc);

/// Materialize the operator as an m x d matrix over vectorized inputs.
CMat materialize(const MeasurementOp& op);

struct NoiseModel {
  enum class Kind { gaussian, quantization };
  Kind kind = Kind::gaussian;
  double sigma = 0.0;  // gaussian
  double delta = 0.0;  // quantization step
  std::uint64_t seed = 0;

  static NoiseModel gaussian_noise(double sigma, std::uint64_t seed);
  static NoiseModel quantization(double delta);
};

struct NoisyMeasurements {
  CVec y_noisy;
  double eps = 0.0;  // exact l2 norm of the realized perturbation
};

/// Gaussian noise is real Normal(0, sigma^2) per component when y is real,
/// complex with the same per-component total variance otherwise; eps is the
/// realized noise norm, so the feasibility ball always contains the truth.
/// Quantization rounds to the delta grid (real/imag separately) and reports
/// the realized rounding error norm.
NoisyMeasurements add_noise(const CVec& y, const NoiseModel& model);

}  // namespace tvr
