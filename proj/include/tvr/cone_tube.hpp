#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "tvr/image.hpp"
#include "tvr/operators.hpp"
#include "tvr/rip.hpp"

namespace tvr {

/// A candidate error array D with a claimed cone constraint
///   ||D_{S^c}||_1 <= gamma ||D_S||_1 + sigma     (|S| <= k, k = |support|)
/// and tube radius eps for ||op(D)||_2 <= tube_multiplier * eps.
struct ConeTubeInstance {
  CMat d_vec;
  std::vector<Index> support;  // flat row-major indices into d_vec
  double gamma = 1.0;
  double sigma = 0.0;
  double eps = 0.0;
};

/// Both sides of every inequality involved in the cone-tube check. The
/// conclusions are the explicit-constant bounds
///   ||D||_2 <= 8 eps' + 5 sigma / (gamma sqrt(k))
///   ||D||_1 <= 2 gamma sqrt(k) (5 eps' + 3 sigma / (gamma sqrt(k))) + sigma
/// with eps' = tube_multiplier * eps. They are only asserted when the
/// instance premises verify; premise violations are reported, not thrown.
struct ConeTubeReport {
  bool cone_premise_ok = false;
  bool tube_premise_ok = false;
  bool premises_ok = false;
  double cone_lhs = 0, cone_rhs = 0;
  double tube_lhs = 0, tube_rhs = 0;
  bool rip_premise_ok = false;  // estimated delta at order 5 k gamma^2 below 1/3
  int rip_order = 0;
  double rip_delta_hat = 0;
  double l2_lhs = 0, l2_rhs = 0;
  double l1_lhs = 0, l1_rhs = 0;
  bool l2_ok = false, l1_ok = false;

  json_t to_json() const;
};

/// Default tube multiplier 2*sqrt(2): the value the gradient-domain
/// instantiation produces for stacked derivative measurements. Pass 1.0 to
/// check the bare tube ||op(D)|| <= eps.
ConeTubeReport check_cone_tube(const ConeTubeInstance& instance, const MeasurementOp& op,
                               double tube_multiplier = 2.0 * std::numbers::sqrt2,
                               const RipEstimate* rip = nullptr);

/// Frozen constant for the strengthened Sobolev check: assembled from the
/// RIP null-space chain with distortion allowance delta <= 0.9 and the Haar
/// decay constant C1,
///   ||D||_2 <= eps/(1-d) + [ (1+d)/(1-d) + 1 ] C1 tv log(N^2/s)/sqrt(s)
/// whose coefficients at d = 0.9 are max(10, 20 C1) = 20 C1.
double strong_sobolev_constant();

struct StrongSobolevReport {
  double eps = 0;          // ||b(D)||_2
  double tv = 0;           // ||D||_TV
  double l2 = 0;           // ||D||_2
  double log_factor = 0;   // log(N^2/s), natural log
  double bound_rhs = 0;    // (tv/sqrt(s)) log(N^2/s) + eps
  double ratio = 0;        // l2 / bound_rhs
  double c_ss = 0;
  bool ok = false;
  int rip_order = 0;       // 2s
  double rip_delta_hat = 0;
  bool rip_premise_ok = false;  // delta_hat < 1 (and <= 0.9 for the frozen constant)

  json_t to_json() const;
};

/// Evaluates eps = ||b(D)||_2 and the ratio of ||D||_2 against the
/// strengthened Sobolev right-hand side; asserts ratio <= strong_sobolev
/// constant. rip may supply a precomputed estimate for b composed with the
/// inverse Haar transform at order 2s; otherwise a sampled estimate is run.
StrongSobolevReport check_strong_sobolev(const Image& d_img, const MeasurementOp& b, int s,
                                         const RipEstimate* rip = nullptr);

}  // namespace tvr
