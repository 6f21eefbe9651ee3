#pragma once

#include <cstdint>
#include <vector>

#include "tvr/gradient.hpp"
#include "tvr/image.hpp"
#include "tvr/operators.hpp"

namespace tvr {

struct SolverConfig {
  int max_iters = 2000;
  double rel_tol = 1e-6;     // relative change of the iterate for early stop
  double feas_slack = 1e-4;  // allowed relative overshoot of the eps ball
  double step_scale = 0.99;  // fraction of the largest stable step
  TvMode tv_mode = TvMode::anisotropic;
  bool real_valued = true;   // optimize over real images (Re after adjoints)
  bool record_history = true;
  int power_iters = 20;      // operator norm estimation
  std::uint64_t power_seed = 0x9e3779b97f4a7c15ULL;

  void validate() const;
};

struct IterRecord {
  double objective = 0;
  double residual = 0;
};

struct ReconstructionResult {
  Image estimate;
  int iterations = 0;
  double residual = 0;   // ||op(estimate) - y||_2
  double objective = 0;  // TV or l1 objective of the estimate
  bool converged = false;
  std::vector<IterRecord> history;
};

/// Power-method estimate of the operator norm of op (20 iterations on
/// op* op from a seeded start by default). Deterministic.
double estimate_op_norm(const MeasurementOp& op, int iters, std::uint64_t seed);

/// argmin ||Z||_TV  s.t.  ||op(Z) - y||_2 <= eps, by a first-order
/// primal-dual scheme on the stacked map (grad, op) with the l2-ball
/// handled by projection. eps = 0 is treated as a tiny ball
/// 1e-12 ||y||_2 so the projection stays well defined. The returned
/// estimate is the best-objective iterate among those within the slack
/// ball; converged is false when no iterate ever reached it.
ReconstructionResult solve_tv(const MeasurementOp& op, const CVec& y, double eps,
                              const SolverConfig& config = {});

/// argmin ||H(Z)||_1 under the same constraint: the plain l1 decoder run in
/// Haar coordinates through op composed with the inverse transform.
ReconstructionResult solve_l1_haar(const MeasurementOp& op, const CVec& y, double eps,
                                   const SolverConfig& config = {});

/// argmin of the entrywise l1 norm of the unknown array subject to the
/// feasibility ball. The unknown has op's input shape; pass a d x 1 shaped
/// operator for plain vector decoding.
ReconstructionResult solve_l1_vector(const MeasurementOp& op, const CVec& y, double eps,
                                     const SolverConfig& config = {});

}  // namespace tvr
