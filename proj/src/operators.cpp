#include "tvr/operators.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "fft2d.hpp"
#include "tvr/haar.hpp"
#include "tvr/rng.hpp"

namespace tvr {

// ---------------------------------------------------------------------------
// DenseOp

DenseOp::DenseOp(CMat matrix, Shape input_shape)
    : matrix_(std::move(matrix)), shape_(input_shape) {
  if (matrix_.cols() != shape_.size())
    throw std::invalid_argument("DenseOp: matrix columns != input size");
  if (matrix_.rows() < 1) throw std::invalid_argument("DenseOp: m < 1");
}

CVec DenseOp::apply(const CMat& x) const {
  check_input(x);
  return matrix_ * vectorize(x);
}

CMat DenseOp::adjoint(const CVec& y) const {
  check_output(y);
  CVec v = matrix_.adjoint() * y;
  return unvectorize(v, shape_.rows, shape_.cols);
}

json_t DenseOp::descriptor() const {
  return json_t{{"kind", "dense"},
                {"m", m()},
                {"shape", {shape_.rows, shape_.cols}},
                {"replayable", false}};
}

// ---------------------------------------------------------------------------
// GaussianOp

GaussianOp::GaussianOp(Index m, Index rows, Index cols, std::uint64_t seed)
    : shape_{rows, cols}, seed_(seed) {
  if (m < 1) throw std::invalid_argument("gaussian_op: m < 1");
  if (rows < 1 || cols < 1) throw std::invalid_argument("gaussian_op: empty shape");
  DeterministicRng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  matrix_.resize(m, rows * cols);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < rows * cols; ++c) matrix_(r, c) = scale * rng.normal();
}

CVec GaussianOp::apply(const CMat& x) const {
  check_input(x);
  const CVec v = vectorize(x);
  const RVec re = matrix_ * v.real();
  if (v.imag().isZero(0.0)) return re.cast<Complex>();
  const RVec im = matrix_ * v.imag();
  return re.cast<Complex>() + Complex(0, 1) * im.cast<Complex>();
}

CMat GaussianOp::adjoint(const CVec& y) const {
  check_output(y);
  const RVec re = matrix_.transpose() * y.real();
  const RVec im = matrix_.transpose() * y.imag();
  CVec v = re.cast<Complex>() + Complex(0, 1) * im.cast<Complex>();
  return unvectorize(v, shape_.rows, shape_.cols);
}

json_t GaussianOp::descriptor() const {
  return json_t{{"kind", "gaussian"},
                {"m", m()},
                {"shape", {shape_.rows, shape_.cols}},
                {"seed", seed_}};
}

// ---------------------------------------------------------------------------
// FourierSignedOp

FourierSignedOp::FourierSignedOp(Index m, Index n, std::uint64_t seed, bool signs_enabled)
    : n_(n), seed_(seed), signs_enabled_(signs_enabled) {
  if (n < 1) throw std::invalid_argument("fourier_signed_op: n < 1");
  if (m < 1 || m > n * n) throw std::invalid_argument("fourier_signed_op: need 1 <= m <= N^2");
  DeterministicRng rng(seed);
  signs_ = RMat::Ones(n, n);
  if (signs_enabled_)
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) signs_(r, c) = rng.sign();
  omega_ = rng.sample_without_replacement(static_cast<int>(n * n), static_cast<int>(m));
  scale_ = std::sqrt(static_cast<double>(n * n) / static_cast<double>(m));
}

CVec FourierSignedOp::apply(const CMat& x) const {
  check_input(x);
  CMat z = signs_.cast<Complex>().cwiseProduct(x);
  const CMat f = detail::fft2d_unitary(z, /*inverse=*/false);
  CVec out(m());
  for (Index j = 0; j < m(); ++j) {
    const int flat = omega_[static_cast<std::size_t>(j)];
    out(j) = scale_ * f(flat / n_, flat % n_);
  }
  return out;
}

CMat FourierSignedOp::adjoint(const CVec& y) const {
  check_output(y);
  CMat f = CMat::Zero(n_, n_);
  for (Index j = 0; j < m(); ++j) {
    const int flat = omega_[static_cast<std::size_t>(j)];
    f(flat / n_, flat % n_) = scale_ * y(j);
  }
  CMat z = detail::fft2d_unitary(f, /*inverse=*/true);
  return signs_.cast<Complex>().cwiseProduct(z);
}

json_t FourierSignedOp::descriptor() const {
  std::vector<int> sgn;
  if (signs_enabled_) {
    sgn.reserve(static_cast<std::size_t>(n_ * n_));
    for (Index r = 0; r < n_; ++r)
      for (Index c = 0; c < n_; ++c) sgn.push_back(signs_(r, c) > 0 ? 1 : -1);
  }
  return json_t{{"kind", kind()},
                {"m", m()},
                {"shape", {n_, n_}},
                {"seed", seed_},
                {"omega", omega_},
                {"sign_diagonal", sgn}};
}

// ---------------------------------------------------------------------------
// CompositeTVOp

CompositeTVOp::CompositeTVOp(OpPtr a, OpPtr a_prime, OpPtr b)
    : a_(std::move(a)), a_prime_(std::move(a_prime)), b_(std::move(b)) {
  if (!a_ || !a_prime_ || !b_) throw std::invalid_argument("composite_tv_op: null sub-operator");
  const Shape sb = b_->input_shape();
  if (sb.rows != sb.cols) throw std::invalid_argument("composite_tv_op: B must act on N x N");
  n_ = sb.rows;
  const Shape expect{n_ - 1, n_};
  if (a_->input_shape() != expect || a_prime_->input_shape() != expect)
    throw std::invalid_argument("composite_tv_op: A, A' must act on (N-1) x N");
  if (a_->m() != a_prime_->m())
    throw std::invalid_argument("composite_tv_op: A and A' must have equal m1");
  m1_ = a_->m();
  m2_ = b_->m();
}

CVec CompositeTVOp::apply(const CMat& x) const {
  check_input(x);
  const CMat xt = x.transpose();
  CVec out(m());
  out.segment(0, m1_) = a_->apply(CMat(x.bottomRows(n_ - 1)));
  out.segment(m1_, m1_) = a_->apply(CMat(x.topRows(n_ - 1)));
  out.segment(2 * m1_, m1_) = a_prime_->apply(CMat(xt.bottomRows(n_ - 1)));
  out.segment(3 * m1_, m1_) = a_prime_->apply(CMat(xt.topRows(n_ - 1)));
  out.segment(4 * m1_, m2_) = b_->apply(x);
  return out;
}

CMat CompositeTVOp::adjoint(const CVec& y) const {
  check_output(y);
  CMat z = CMat::Zero(n_, n_);
  z.bottomRows(n_ - 1) += a_->adjoint(y.segment(0, m1_));
  z.topRows(n_ - 1) += a_->adjoint(y.segment(m1_, m1_));
  CMat zt = CMat::Zero(n_, n_);
  zt.bottomRows(n_ - 1) += a_prime_->adjoint(y.segment(2 * m1_, m1_));
  zt.topRows(n_ - 1) += a_prime_->adjoint(y.segment(3 * m1_, m1_));
  z += zt.transpose();
  z += b_->adjoint(y.segment(4 * m1_, m2_));
  return z;
}

json_t CompositeTVOp::descriptor() const {
  return json_t{{"kind", "composite_tv"},
                {"m", m()},
                {"m1", m1_},
                {"m2", m2_},
                {"shape", {n_, n_}},
                {"a", a_->descriptor()},
                {"a_prime", a_prime_->descriptor()},
                {"b", b_->descriptor()}};
}

// ---------------------------------------------------------------------------
// HaarComposedOp

HaarComposedOp::HaarComposedOp(OpPtr inner) : inner_(std::move(inner)) {
  if (!inner_) throw std::invalid_argument("compose_with_inverse_haar: null operator");
  const Shape s = inner_->input_shape();
  if (s.rows != s.cols || !is_power_of_two(s.rows))
    throw std::invalid_argument("compose_with_inverse_haar: inner shape must be 2^n x 2^n");
}

CVec HaarComposedOp::apply(const CMat& c) const {
  check_input(c);
  return inner_->apply(haar_inverse_mat(c));
}

CMat HaarComposedOp::adjoint(const CVec& y) const {
  return haar_forward_mat(inner_->adjoint(y));
}

json_t HaarComposedOp::descriptor() const {
  return json_t{{"kind", "haar_composed"}, {"m", m()}, {"inner", inner_->descriptor()}};
}

// ---------------------------------------------------------------------------
// factories

OpPtr gaussian_op(Index m, Index rows, Index cols, std::uint64_t seed) {
  return std::make_shared<GaussianOp>(m, rows, cols, seed);
}

OpPtr fourier_signed_op(Index m, Index n, std::uint64_t seed, bool signs_enabled) {
  return std::make_shared<FourierSignedOp>(m, n, seed, signs_enabled);
}

OpPtr composite_tv_op(OpPtr a, OpPtr a_prime, OpPtr b) {
  return std::make_shared<CompositeTVOp>(std::move(a), std::move(a_prime), std::move(b));
}

OpPtr compose_with_inverse_haar(OpPtr op) {
  return std::make_shared<HaarComposedOp>(std::move(op));
}

OpPtr dense_op(CMat matrix, Shape input_shape) {
  return std::make_shared<DenseOp>(std::move(matrix), input_shape);
}

OpPtr op_from_descriptor(const json_t& desc) {
  const std::string kind = desc.at("kind").get<std::string>();
  if (kind == "gaussian") {
    const auto sh = desc.at("shape");
    return gaussian_op(desc.at("m").get<Index>(), sh.at(0).get<Index>(), sh.at(1).get<Index>(),
                       desc.at("seed").get<std::uint64_t>());
  }
  if (kind == "fourier_signed" || kind == "fourier_plain") {
    const auto sh = desc.at("shape");
    return fourier_signed_op(desc.at("m").get<Index>(), sh.at(0).get<Index>(),
                             desc.at("seed").get<std::uint64_t>(), kind == "fourier_signed");
  }
  if (kind == "composite_tv") {
    return composite_tv_op(op_from_descriptor(desc.at("a")),
                           op_from_descriptor(desc.at("a_prime")),
                           op_from_descriptor(desc.at("b")));
  }
  if (kind == "haar_composed") {
    return compose_with_inverse_haar(op_from_descriptor(desc.at("inner")));
  }
  throw std::invalid_argument("op_from_descriptor: not replayable: " + kind);
}

CMat materialize(const MeasurementOp& op) {
  const Shape s = op.input_shape();
  CMat out(op.m(), s.size());
  CMat basis = CMat::Zero(s.rows, s.cols);
  for (Index i = 0; i < s.size(); ++i) {
    basis.data()[i] = 1.0;
    out.col(i) = op.apply(basis);
    basis.data()[i] = 0.0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// noise

NoiseModel NoiseModel::gaussian_noise(double sigma, std::uint64_t seed) {
  if (sigma < 0) throw std::invalid_argument("NoiseModel: sigma < 0");
  NoiseModel m;
  m.kind = Kind::gaussian;
  m.sigma = sigma;
  m.seed = seed;
  return m;
}

NoiseModel NoiseModel::quantization(double delta) {
  if (delta <= 0) throw std::invalid_argument("NoiseModel: delta <= 0");
  NoiseModel m;
  m.kind = Kind::quantization;
  m.delta = delta;
  return m;
}

NoisyMeasurements add_noise(const CVec& y, const NoiseModel& model) {
  NoisyMeasurements out;
  if (model.kind == NoiseModel::Kind::gaussian) {
    DeterministicRng rng(model.seed);
    CVec xi(y.size());
    const bool real_y = y.imag().isZero(0.0);
    for (Index i = 0; i < y.size(); ++i) {
      if (real_y)
        xi(i) = model.sigma * rng.normal();
      else
        xi(i) = model.sigma / std::sqrt(2.0) * rng.complex_normal();
    }
    out.y_noisy = y + xi;
    out.eps = xi.norm();
  } else {
    const double d = model.delta;
    CVec q(y.size());
    for (Index i = 0; i < y.size(); ++i)
      q(i) = Complex(d * std::round(y(i).real() / d), d * std::round(y(i).imag() / d));
    out.y_noisy = q;
    out.eps = (q - y).norm();
  }
  return out;
}

}  // namespace tvr
