#include "tvr/gradient.hpp"

#include <algorithm>
#include <vector>

namespace tvr {

double GradientField::l1_norm() const {
  return gx.cwiseAbs().sum() + gy.cwiseAbs().sum();
}

double GradientField::l2_norm() const {
  return std::sqrt(gx.squaredNorm() + gy.squaredNorm());
}

CMat row_diff(const CMat& x) {
  if (x.rows() < 2) throw std::invalid_argument("row_diff: need at least 2 rows");
  return x.bottomRows(x.rows() - 1) - x.topRows(x.rows() - 1);
}

CMat col_diff(const CMat& x) {
  if (x.cols() < 2) throw std::invalid_argument("col_diff: need at least 2 cols");
  return x.rightCols(x.cols() - 1) - x.leftCols(x.cols() - 1);
}

GradientField discrete_gradient(const CMat& x) {
  if (x.rows() < 2 || x.cols() < 2)
    throw std::invalid_argument("discrete_gradient: dimension < 2");
  GradientField g;
  g.gx = CMat::Zero(x.rows(), x.cols());
  g.gy = CMat::Zero(x.rows(), x.cols());
  g.gx.topRows(x.rows() - 1) = row_diff(x);
  g.gy.leftCols(x.cols() - 1) = col_diff(x);
  return g;
}

GradientField discrete_gradient(const Image& x) { return discrete_gradient(x.mat()); }

CMat gradient_adjoint(const GradientField& g) {
  const Index r = g.gx.rows(), c = g.gx.cols();
  if (g.gy.rows() != r || g.gy.cols() != c)
    throw std::invalid_argument("gradient_adjoint: component shape mismatch");
  CMat a = -g.gx - g.gy;
  a.bottomRows(r - 1) += g.gx.topRows(r - 1);
  a.rightCols(c - 1) += g.gy.leftCols(c - 1);
  return a;
}

double tv_norm(const CMat& x, TvMode mode) {
  const GradientField g = discrete_gradient(x);
  if (mode == TvMode::anisotropic) return g.l1_norm();
  return (g.gx.array().abs2() + g.gy.array().abs2()).sqrt().sum();
}

double tv_norm(const Image& x, TvMode mode) { return tv_norm(x.mat(), mode); }

double best_s_term_gradient_error(const Image& x, std::int64_t s) {
  const GradientField g = discrete_gradient(x);
  std::vector<double> mags;
  mags.reserve(static_cast<std::size_t>(2 * g.gx.size()));
  for (Index r = 0; r < g.gx.rows(); ++r)
    for (Index c = 0; c < g.gx.cols(); ++c) mags.push_back(std::abs(g.gx(r, c)));
  for (Index r = 0; r < g.gy.rows(); ++r)
    for (Index c = 0; c < g.gy.cols(); ++c) mags.push_back(std::abs(g.gy(r, c)));
  if (s >= static_cast<std::int64_t>(mags.size())) return 0.0;
  if (s < 0) throw std::invalid_argument("best_s_term_gradient_error: s < 0");
  std::stable_sort(mags.begin(), mags.end(), std::greater<double>());
  double tail = 0.0;
  for (std::size_t i = static_cast<std::size_t>(s); i < mags.size(); ++i) tail += mags[i];
  return tail;
}

std::int64_t gradient_support_size(const Image& x) {
  const GradientField g = discrete_gradient(x);
  std::int64_t n = 0;
  for (Index r = 0; r < g.gx.rows(); ++r)
    for (Index c = 0; c < g.gx.cols(); ++c) n += (g.gx(r, c) != Complex{0.0, 0.0});
  for (Index r = 0; r < g.gy.rows(); ++r)
    for (Index c = 0; c < g.gy.cols(); ++c) n += (g.gy(r, c) != Complex{0.0, 0.0});
  return n;
}

}  // namespace tvr
