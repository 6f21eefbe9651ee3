#pragma once

#include <cstdint>
#include <string>

#include "tvr/operators.hpp"

namespace tvr {

/// Restricted isometry distortion estimate of order s:
/// delta = max(1 - min_ratio, max_ratio - 1) over the probed squared
/// ratios ||op(x)||^2 / ||x||^2 of s-sparse x. The exhaustive method scans
/// every support and returns the true constant; the sampled method is a
/// lower bound that is non-decreasing in the trial count for a fixed seed.
struct RipEstimate {
  int order_s = 0;
  double delta_lower = 0.0;
  std::string method;  // "exhaustive" or "sampled"
  double min_ratio = 1.0;
  double max_ratio = 1.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;

  json_t to_json() const;
};

/// Thrown when the support enumeration would exceed the combinatorial
/// budget; callers should fall back to estimate_rip_sampled.
class RipBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True delta_s from the extreme squared singular values of all m x s
/// column submatrices. Requires C(d, s) <= 1e6.
RipEstimate estimate_rip_exhaustive(const MeasurementOp& op, int s);

/// Lower bound on delta_s from random s-sparse complex Gaussian unit
/// probes. Probe t draws its stream from mix_seed(seed, t), so results are
/// independent of evaluation order.
RipEstimate estimate_rip_sampled(const MeasurementOp& op, int s, std::int64_t trials,
                                 std::uint64_t seed);

}  // namespace tvr
