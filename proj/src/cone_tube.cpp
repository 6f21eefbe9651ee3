#include "tvr/cone_tube.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "tvr/gradient.hpp"
#include "tvr/haar.hpp"

namespace tvr {

json_t ConeTubeReport::to_json() const {
  return json_t{{"cone_premise_ok", cone_premise_ok},
                {"tube_premise_ok", tube_premise_ok},
                {"premises_ok", premises_ok},
                {"cone_lhs", cone_lhs},
                {"cone_rhs", cone_rhs},
                {"tube_lhs", tube_lhs},
                {"tube_rhs", tube_rhs},
                {"rip_premise_ok", rip_premise_ok},
                {"rip_order", rip_order},
                {"rip_delta_hat", rip_delta_hat},
                {"l2_lhs", l2_lhs},
                {"l2_rhs", l2_rhs},
                {"l1_lhs", l1_lhs},
                {"l1_rhs", l1_rhs},
                {"l2_ok", l2_ok},
                {"l1_ok", l1_ok}};
}

ConeTubeReport check_cone_tube(const ConeTubeInstance& instance, const MeasurementOp& op,
                               double tube_multiplier, const RipEstimate* rip) {
  if (instance.gamma < 1.0) throw std::invalid_argument("check_cone_tube: gamma < 1");
  if (instance.sigma < 0.0 || instance.eps < 0.0)
    throw std::invalid_argument("check_cone_tube: negative sigma or eps");
  const Index k = static_cast<Index>(instance.support.size());
  if (k < 1) throw std::invalid_argument("check_cone_tube: empty support");

  ConeTubeReport rep;

  // split |D| into on-support and off-support l1 masses
  double on = 0.0, off = 0.0;
  std::vector<bool> mask(static_cast<std::size_t>(instance.d_vec.size()), false);
  for (Index idx : instance.support) {
    if (idx < 0 || idx >= instance.d_vec.size())
      throw std::invalid_argument("check_cone_tube: support index out of range");
    mask[static_cast<std::size_t>(idx)] = true;
  }
  for (Index i = 0; i < instance.d_vec.size(); ++i) {
    const double a = std::abs(instance.d_vec.data()[i]);
    (mask[static_cast<std::size_t>(i)] ? on : off) += a;
  }

  // premises, with a hair of float slack on the cone comparison
  rep.cone_lhs = off;
  rep.cone_rhs = instance.gamma * on + instance.sigma;
  rep.cone_premise_ok = rep.cone_lhs <= rep.cone_rhs * (1.0 + 1e-12) + 1e-300;
  rep.tube_lhs = op.apply(instance.d_vec).norm();
  rep.tube_rhs = tube_multiplier * instance.eps;
  rep.tube_premise_ok = rep.tube_lhs <= rep.tube_rhs * (1.0 + 1e-12) + 1e-300;
  rep.premises_ok = rep.cone_premise_ok && rep.tube_premise_ok;

  rep.rip_order = static_cast<int>(std::ceil(
      5.0 * static_cast<double>(k) * instance.gamma * instance.gamma));
  if (rip != nullptr) {
    rep.rip_delta_hat = rip->delta_lower;
  } else {
    const RipEstimate est = estimate_rip_sampled(op, rep.rip_order, 200, 0x5eed);
    rep.rip_delta_hat = est.delta_lower;
  }
  rep.rip_premise_ok = rep.rip_delta_hat < 1.0 / 3.0;

  const double sk = instance.gamma * std::sqrt(static_cast<double>(k));
  const double eps_eff = tube_multiplier * instance.eps;
  rep.l2_lhs = instance.d_vec.norm();
  rep.l2_rhs = 8.0 * eps_eff + 5.0 * instance.sigma / sk;
  rep.l1_lhs = instance.d_vec.cwiseAbs().sum();
  rep.l1_rhs = 2.0 * sk * (5.0 * eps_eff + 3.0 * instance.sigma / sk) + instance.sigma;
  rep.l2_ok = rep.l2_lhs <= rep.l2_rhs * (1.0 + 1e-12);
  rep.l1_ok = rep.l1_lhs <= rep.l1_rhs * (1.0 + 1e-12);
  return rep;
}

double strong_sobolev_constant() { return 20.0 * haar_decay_constant(); }

json_t StrongSobolevReport::to_json() const {
  return json_t{{"eps", eps},
                {"tv", tv},
                {"l2", l2},
                {"log_factor", log_factor},
                {"bound_rhs", bound_rhs},
                {"ratio", ratio},
                {"c_ss", c_ss},
                {"ok", ok},
                {"rip_order", rip_order},
                {"rip_delta_hat", rip_delta_hat},
                {"rip_premise_ok", rip_premise_ok}};
}

StrongSobolevReport check_strong_sobolev(const Image& d_img, const MeasurementOp& b, int s,
                                         const RipEstimate* rip) {
  if (s < 1) throw std::invalid_argument("check_strong_sobolev: s < 1");
  const Index n = d_img.rows();
  if (!d_img.is_square()) throw std::invalid_argument("check_strong_sobolev: image not square");

  StrongSobolevReport rep;
  rep.rip_order = 2 * s;
  if (rip != nullptr) {
    rep.rip_delta_hat = rip->delta_lower;
  } else {
    // non-owning alias: b outlives the temporary composition
    const OpPtr composed = compose_with_inverse_haar(OpPtr(std::shared_ptr<void>(), &b));
    rep.rip_delta_hat = estimate_rip_sampled(*composed, rep.rip_order, 200, 0x50b0).delta_lower;
  }
  rep.rip_premise_ok = rep.rip_delta_hat <= 0.9;

  rep.eps = b.apply(d_img.mat()).norm();
  rep.tv = tv_norm(d_img, TvMode::anisotropic);
  rep.l2 = d_img.norm();
  rep.log_factor = std::log(static_cast<double>(n * n) / static_cast<double>(s));
  rep.bound_rhs = rep.tv / std::sqrt(static_cast<double>(s)) * rep.log_factor + rep.eps;
  rep.c_ss = strong_sobolev_constant();
  rep.ratio = rep.bound_rhs > 0 ? rep.l2 / rep.bound_rhs : 0.0;
  rep.ok = rep.ratio <= rep.c_ss;
  return rep;
}

}  // namespace tvr
