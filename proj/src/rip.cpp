#include "tvr/rip.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <nlohmann/json.hpp>

#include "tvr/rng.hpp"

namespace tvr {

json_t RipEstimate::to_json() const {
  return json_t{{"order_s", order_s},     {"delta_lower", delta_lower},
                {"method", method},       {"min_ratio", min_ratio},
                {"max_ratio", max_ratio}, {"trials", trials},
                {"seed", seed}};
}

static double binomial_approx(Index d, int s) {
  double v = 1.0;
  for (int i = 0; i < s; ++i) v *= static_cast<double>(d - i) / static_cast<double>(i + 1);
  return v;
}

RipEstimate estimate_rip_exhaustive(const MeasurementOp& op, int s) {
  const Index d = op.input_shape().size();
  if (s < 1 || s > d) throw std::invalid_argument("estimate_rip_exhaustive: bad order");
  const double combos = binomial_approx(d, s);
  if (combos > 1e6)
    throw RipBudgetError(
        "estimate_rip_exhaustive: C(d, s) exceeds the 1e6 support budget; "
        "use estimate_rip_sampled");

  const CMat mat = materialize(op);
  const CMat gram = mat.adjoint() * mat;  // d x d, reused for every support

  std::vector<Index> combo(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) combo[static_cast<std::size_t>(i)] = i;

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  Eigen::MatrixXcd sub(s, s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig;
  std::int64_t count = 0;
  while (true) {
    for (int r = 0; r < s; ++r)
      for (int c = 0; c < s; ++c)
        sub(r, c) = gram(combo[static_cast<std::size_t>(r)], combo[static_cast<std::size_t>(c)]);
    eig.compute(sub, Eigen::EigenvaluesOnly);
    lo = std::min(lo, eig.eigenvalues().minCoeff());
    hi = std::max(hi, eig.eigenvalues().maxCoeff());
    ++count;
    // next combination in lexicographic order
    int i = s - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == d - s + i) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j)
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }

  RipEstimate est;
  est.order_s = s;
  est.method = "exhaustive";
  est.min_ratio = lo;
  est.max_ratio = hi;
  est.trials = count;
  est.delta_lower = std::max(1.0 - lo, hi - 1.0);
  return est;
}

RipEstimate estimate_rip_sampled(const MeasurementOp& op, int s, std::int64_t trials,
                                 std::uint64_t seed) {
  const Shape shape = op.input_shape();
  const Index d = shape.size();
  if (s < 1 || s > d) throw std::invalid_argument("estimate_rip_sampled: bad order");
  if (trials < 1) throw std::invalid_argument("estimate_rip_sampled: trials < 1");

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    DeterministicRng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    const auto support =
        rng.sample_without_replacement(static_cast<int>(d), s);
    CMat x = CMat::Zero(shape.rows, shape.cols);
    for (int idx : support) x.data()[idx] = rng.complex_normal();
    const double nx = x.norm();
    x /= nx;
    const double ratio = op.apply(x).squaredNorm();
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }

  RipEstimate est;
  est.order_s = s;
  est.method = "sampled";
  est.min_ratio = lo;
  est.max_ratio = hi;
  est.trials = trials;
  est.seed = seed;
  est.delta_lower = std::max(1.0 - lo, hi - 1.0);
  return est;
}

}  // namespace tvr
