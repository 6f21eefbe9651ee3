#include "tvr/suites.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "tvr/cone_tube.hpp"
#include "tvr/gradient.hpp"
#include "tvr/haar.hpp"
#include "tvr/padding.hpp"
#include "tvr/phantom.hpp"
#include "tvr/rip.hpp"
#include "tvr/rng.hpp"

namespace tvr {

namespace {

CMat random_image(Index rows, Index cols, DeterministicRng& rng) {
  CMat x(rows, cols);
  for (Index i = 0; i < x.size(); ++i) x.data()[i] = rng.normal();
  return x;
}

json_t suite_sobolev(const SuiteParams& p) {
  const Index n = p.n > 0 ? p.n : 32;
  DeterministicRng rng(p.seed);
  double max_zero_border = 0.0, max_mean_zero = 0.0;
  for (int t = 0; t < 1000; ++t) {
    CMat x = random_image(n, n, rng);
    x.row(0).setZero();
    x.col(0).setZero();
    max_zero_border = std::max(max_zero_border, x.norm() / tv_norm(x));
    CMat z = random_image(n, n, rng);
    z.array() -= z.mean();
    max_mean_zero = std::max(max_mean_zero, z.norm() / tv_norm(z));
  }
  const bool pass = max_zero_border <= 0.5 && max_mean_zero <= 1.0;
  return json_t{{"suite", "sobolev"},
                {"params", {{"n", n}, {"seed", p.seed}, {"count", 1000}}},
                {"max_zero_border_ratio", max_zero_border},
                {"zero_border_bound", 0.5},
                {"max_mean_zero_ratio", max_mean_zero},
                {"mean_zero_bound", 1.0},
                {"pass", pass}};
}

json_t suite_decay(const SuiteParams& p) {
  const Index n = p.n > 0 ? p.n : 64;
  DeterministicRng rng(p.seed);
  const double c1 = haar_decay_constant();
  double worst = 0.0;
  for (int t = 0; t < 100; ++t)
    worst = std::max(worst, decay_ratio(Image(random_image(n, n, rng))));
  worst = std::max(worst, decay_ratio(phantom(std::max<Index>(n, 16))));
  return json_t{{"suite", "decay"},
                {"params", {{"n", n}, {"seed", p.seed}, {"count", 100}}},
                {"max_ratio", worst},
                {"c1", c1},
                {"pass", worst <= c1}};
}

json_t suite_haar_lemmas(const SuiteParams& p) {
  const Index n = p.n > 0 ? p.n : 32;
  const int levels = log2_exact(n);
  double max_grad = 0.0;
  for (const auto& idx : all_wavelet_indices(levels))
    max_grad = std::max(max_grad, wavelet_gradient_l1(idx, levels));
  int max_edge = 0;
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c + 1 < n; ++c)
      max_edge = std::max(max_edge, edge_nonconstant_count(r, c, r, c + 1, levels));
  for (Index r = 0; r + 1 < n; ++r)
    for (Index c = 0; c < n; ++c)
      max_edge = std::max(max_edge, edge_nonconstant_count(r, c, r + 1, c, levels));
  const bool pass = max_grad <= 8.0 && max_edge <= 6 * levels;
  return json_t{{"suite", "haar_lemmas"},
                {"params", {{"n", n}}},
                {"max_wavelet_gradient_l1", max_grad},
                {"gradient_bound", 8.0},
                {"max_edge_nonconstant", max_edge},
                {"edge_bound", 6 * levels},
                {"pass", pass}};
}

json_t suite_padding(const SuiteParams& p) {
  const Index n = p.n > 0 ? p.n : 16;
  DeterministicRng rng(p.seed);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    CMat phi(n - 1, n), x(n, n);
    for (Index i = 0; i < phi.size(); ++i) phi.data()[i] = rng.complex_normal();
    for (Index i = 0; i < x.size(); ++i) x.data()[i] = rng.complex_normal();
    const CMat top = pad_matrix(phi, Placement::top_zeros);
    const CMat bot = pad_matrix(phi, Placement::bottom_zeros);
    const Complex lhs_x = inner_product(phi, row_diff(x));
    const Complex rhs_x = inner_product(top, x) - inner_product(bot, x);
    worst = std::max(worst, std::abs(lhs_x - rhs_x) / std::max(1e-300, std::abs(lhs_x)));
    const CMat xt = x.transpose();
    const Complex lhs_y = inner_product(phi, CMat(col_diff(x).transpose()));
    const Complex rhs_y = inner_product(top, xt) - inner_product(bot, xt);
    worst = std::max(worst, std::abs(lhs_y - rhs_y) / std::max(1e-300, std::abs(lhs_y)));
  }
  return json_t{{"suite", "padding"},
                {"params", {{"n", n}, {"seed", p.seed}, {"count", 200}}},
                {"max_rel_error", worst},
                {"tolerance", 1e-12},
                {"pass", worst <= 1e-12}};
}

json_t suite_cone_tube(const SuiteParams& p) {
  const Index d = p.n > 0 ? p.n : 64;
  const Index m = 48;
  const int k = 2;
  const double gamma = 1.0;
  const OpPtr op = gaussian_op(m, d, 1, p.seed);
  const RipEstimate sampled = estimate_rip_sampled(*op, 5 * k, 500, mix_seed(p.seed, 101));

  // null-space basis for adversarial instances
  const CMat mat = materialize(*op);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat, Eigen::ComputeFullV);
  const Eigen::MatrixXcd null_basis = svd.matrixV().rightCols(d - m);

  int checked = 0, failed = 0;
  double worst_margin = 0.0;
  for (int t = 0; t < 1000; ++t) {
    DeterministicRng rng(mix_seed(p.seed, 1000 + static_cast<std::uint64_t>(t)));
    CVec dv(d);
    if (t % 3 == 0) {
      for (Index i = 0; i < d; ++i) dv(i) = rng.normal();
    } else if (t % 3 == 1) {
      Eigen::VectorXcd z(d - m);
      for (Index i = 0; i < d - m; ++i) z(i) = rng.normal();
      dv = null_basis * z;
    } else {
      dv.setZero();
      const auto sup = rng.sample_without_replacement(static_cast<int>(d), k);
      for (int idx : sup) dv(idx) = 3.0 * rng.normal();
      Eigen::VectorXcd z(d - m);
      for (Index i = 0; i < d - m; ++i) z(i) = 0.5 * rng.normal();
      dv += null_basis * z;
    }
    ConeTubeInstance inst;
    inst.d_vec = unvectorize(dv, d, 1);
    std::vector<std::pair<double, Index>> mags(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) mags[static_cast<std::size_t>(i)] = {std::abs(dv(i)), i};
    std::sort(mags.begin(), mags.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (int i = 0; i < k; ++i) inst.support.push_back(mags[static_cast<std::size_t>(i)].second);
    inst.gamma = gamma;
    double on = 0, off = 0;
    for (Index i = 0; i < d; ++i) off += std::abs(dv(i));
    for (Index idx : inst.support) {
      on += std::abs(dv(idx));
      off -= std::abs(dv(idx));
    }
    inst.sigma = std::max(0.0, off - gamma * on);
    inst.eps = op->apply(inst.d_vec).norm();
    const ConeTubeReport rep = check_cone_tube(inst, *op, 1.0, &sampled);
    if (!rep.premises_ok) continue;
    ++checked;
    if (!(rep.l2_ok && rep.l1_ok)) ++failed;
    if (rep.l2_rhs > 0) worst_margin = std::max(worst_margin, rep.l2_lhs / rep.l2_rhs);
    if (rep.l1_rhs > 0) worst_margin = std::max(worst_margin, rep.l1_lhs / rep.l1_rhs);
  }
  return json_t{{"suite", "cone_tube"},
                {"params", {{"d", d}, {"m", m}, {"k", k}, {"gamma", gamma}, {"seed", p.seed}}},
                {"instances_checked", checked},
                {"instances_failed", failed},
                {"worst_bound_ratio", worst_margin},
                {"rip_delta_hat_sampled", sampled.delta_lower},
                {"rip_order", 5 * k},
                {"pass", checked > 0 && failed == 0}};
}

json_t suite_strong_sobolev(const SuiteParams& p) {
  const Index n = p.n > 0 ? p.n : 32;
  if (!is_power_of_two(n)) throw std::invalid_argument("strong_sobolev suite: n must be 2^k");
  const int s = static_cast<int>(n) / 4;
  const Index m = static_cast<Index>(0.3 * static_cast<double>(n * n));
  const OpPtr b = fourier_signed_op(m, n, p.seed);
  const OpPtr composed = compose_with_inverse_haar(b);
  const RipEstimate est = estimate_rip_sampled(*composed, 2 * s, 300, mix_seed(p.seed, 7));

  DeterministicRng rng(mix_seed(p.seed, 99));
  double worst = 0.0;
  bool all_ok = true;
  const double proj = static_cast<double>(m) / static_cast<double>(n * n);
  for (int t = 0; t < 100; ++t) {
    CMat x = random_image(n, n, rng);
    if (t % 2 == 1) {
      // exact null-space projection: the scaled partial DFT is a co-isometry
      x -= proj * b->adjoint(b->apply(x));
    }
    const StrongSobolevReport rep = check_strong_sobolev(Image(x), *b, s, &est);
    worst = std::max(worst, rep.ratio);
    all_ok = all_ok && rep.ok;
  }
  return json_t{{"suite", "strong_sobolev"},
                {"params", {{"n", n}, {"s", s}, {"m", m}, {"seed", p.seed}, {"count", 100}}},
                {"max_ratio", worst},
                {"c_ss", strong_sobolev_constant()},
                {"rip_delta_hat_sampled", est.delta_lower},
                {"pass", all_ok}};
}

json_t suite_rip(const SuiteParams& p) {
  // identity
  const OpPtr ident = dense_op(CMat::Identity(8, 8), Shape{8, 1});
  const RipEstimate e_id = estimate_rip_exhaustive(*ident, 2);
  const bool id_ok = e_id.delta_lower == 0.0;

  // diag(1,1,1,2) at s = 1: ratio extremes {1, 4}
  CMat diag = CMat::Identity(4, 4);
  diag(3, 3) = 2.0;
  const OpPtr dop = dense_op(diag, Shape{4, 1});
  const RipEstimate e_diag = estimate_rip_exhaustive(*dop, 1);
  const bool diag_ok = std::abs(e_diag.delta_lower - 3.0) < 1e-15;

  // sampled never exceeds exhaustive; exhaustive monotone in s
  const OpPtr g = gaussian_op(40, 16, 1, p.seed);
  bool sampled_ok = true, monotone_ok = true;
  double prev = 0.0;
  for (int s = 1; s <= 4; ++s) {
    const RipEstimate ex = estimate_rip_exhaustive(*g, s);
    if (s <= 3) {
      const RipEstimate sm = estimate_rip_sampled(*g, s, 500, mix_seed(p.seed, s));
      sampled_ok = sampled_ok && sm.delta_lower <= ex.delta_lower + 1e-12;
    }
    monotone_ok = monotone_ok && ex.delta_lower >= prev - 1e-12;
    prev = ex.delta_lower;
  }
  const bool pass = id_ok && diag_ok && sampled_ok && monotone_ok;
  return json_t{{"suite", "rip"},
                {"params", {{"seed", p.seed}}},
                {"identity_delta", e_id.delta_lower},
                {"diag_delta1", e_diag.delta_lower},
                {"sampled_le_exhaustive", sampled_ok},
                {"monotone_in_s", monotone_ok},
                {"pass", pass}};
}

}  // namespace

const std::vector<std::string>& property_suite_names() {
  static const std::vector<std::string> names = {
      "sobolev", "decay", "haar_lemmas", "padding", "cone_tube", "strong_sobolev", "rip"};
  return names;
}

json_t run_property_suite(const std::string& suite, const SuiteParams& params) {
  if (suite == "sobolev") return suite_sobolev(params);
  if (suite == "decay") return suite_decay(params);
  if (suite == "haar_lemmas") return suite_haar_lemmas(params);
  if (suite == "padding") return suite_padding(params);
  if (suite == "cone_tube") return suite_cone_tube(params);
  if (suite == "strong_sobolev") return suite_strong_sobolev(params);
  if (suite == "rip") return suite_rip(params);
  throw std::invalid_argument("run_property_suite: unknown suite: " + suite);
}

}  // namespace tvr
