#include "tvr/solver.hpp"

#include <cmath>
#include <limits>

#include "tvr/haar.hpp"
#include "tvr/rng.hpp"

namespace tvr {

void SolverConfig::validate() const {
  if (max_iters < 1) throw std::invalid_argument("SolverConfig: max_iters < 1");
  if (rel_tol <= 0 || feas_slack <= 0)
    throw std::invalid_argument("SolverConfig: rel_tol and feas_slack must be positive");
  if (step_scale <= 0 || step_scale > 1)
    throw std::invalid_argument("SolverConfig: step_scale in (0, 1] required");
}

double estimate_op_norm(const MeasurementOp& op, int iters, std::uint64_t seed) {
  const Shape s = op.input_shape();
  DeterministicRng rng(seed);
  CMat v(s.rows, s.cols);
  for (Index i = 0; i < v.size(); ++i) v.data()[i] = rng.complex_normal();
  v /= v.norm();
  for (int t = 0; t < iters; ++t) {
    CMat w = op.adjoint(op.apply(v));
    const double n = w.norm();
    if (n == 0.0) return 0.0;
    v = w / n;
  }
  return op.apply(v).norm();
}

namespace {

// project each dual gradient entry (or entry pair, isotropic) onto the unit
// ball of the corresponding dual norm
void project_dual_gradient(CMat& px, CMat& py, TvMode mode) {
  if (mode == TvMode::anisotropic) {
    for (Index i = 0; i < px.size(); ++i) {
      const double ax = std::abs(px.data()[i]);
      if (ax > 1.0) px.data()[i] /= ax;
      const double ay = std::abs(py.data()[i]);
      if (ay > 1.0) py.data()[i] /= ay;
    }
  } else {
    for (Index i = 0; i < px.size(); ++i) {
      const double r = std::sqrt(std::norm(px.data()[i]) + std::norm(py.data()[i]));
      if (r > 1.0) {
        px.data()[i] /= r;
        py.data()[i] /= r;
      }
    }
  }
}

// prox of the conjugate of the eps-ball indicator around y:
// v -> (v - sig y) (1 - sig eps / ||v - sig y||)_+
void prox_ball_conjugate(CVec& q, const CVec& v, const CVec& y, double sig, double eps) {
  q = v - sig * y;
  const double n = q.norm();
  if (n > 0.0) {
    const double f = std::max(0.0, 1.0 - sig * eps / n);
    q *= f;
  }
}

double l1_norm(const CMat& x) { return x.cwiseAbs().sum(); }

void soft_threshold(CMat& x, double t) {
  for (Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x.data()[i]);
    x.data()[i] = a <= t ? Complex{0, 0} : x.data()[i] * (1.0 - t / a);
  }
}

struct BestTracker {
  double best_obj = std::numeric_limits<double>::infinity();
  CMat best;
  bool found = false;

  void offer(const CMat& x, double obj) {
    if (obj < best_obj) {
      best_obj = obj;
      best = x;
      found = true;
    }
  }
};

ReconstructionResult finish(BestTracker& tracker, const CMat& last, const MeasurementOp& op,
                            const CVec& y, int iters, std::vector<IterRecord> history,
                            TvMode mode, bool tv_objective) {
  ReconstructionResult res;
  res.iterations = iters;
  res.history = std::move(history);
  const CMat& pick = tracker.found ? tracker.best : last;
  res.estimate = Image(pick);
  res.residual = (op.apply(pick) - y).norm();
  res.objective = tv_objective ? tv_norm(pick, mode) : l1_norm(pick);
  res.converged = tracker.found;
  return res;
}

}  // namespace

ReconstructionResult solve_tv(const MeasurementOp& op, const CVec& y, double eps,
                              const SolverConfig& config) {
  config.validate();
  if (eps < 0) throw std::invalid_argument("solve_tv: eps < 0");
  const Shape s = op.input_shape();
  if (s.rows < 2 || s.cols < 2) throw std::invalid_argument("solve_tv: image too small");
  if (y.size() != op.m()) throw std::invalid_argument("solve_tv: measurement size mismatch");

  const double op_norm = estimate_op_norm(op, config.power_iters, config.power_seed);
  // ||grad||^2 <= 8; 5% headroom on the power-method estimate
  const double L = std::sqrt(8.0 + std::pow(1.05 * op_norm, 2));
  const double tau = config.step_scale / L;
  const double sig = config.step_scale / L;
  const double eps_eff = std::max(eps, 1e-12 * y.norm());
  const double feas_limit = eps_eff * (1.0 + config.feas_slack);

  CMat x = CMat::Zero(s.rows, s.cols);
  CMat xbar = x;
  CMat px = CMat::Zero(s.rows, s.cols), py = px;
  CVec q = CVec::Zero(op.m());

  BestTracker tracker;
  std::vector<IterRecord> history;
  if (config.record_history) history.reserve(static_cast<std::size_t>(config.max_iters));
  int it = 0;
  for (; it < config.max_iters; ++it) {
    const GradientField g = discrete_gradient(xbar);
    px += sig * g.gx;
    py += sig * g.gy;
    project_dual_gradient(px, py, config.tv_mode);

    prox_ball_conjugate(q, CVec(q + sig * op.apply(xbar)), y, sig, eps_eff);

    CMat step = gradient_adjoint({px, py}) + op.adjoint(q);
    if (config.real_valued) step = step.real().cast<Complex>();
    const CMat x_new = x - tau * step;
    xbar = 2.0 * x_new - x;
    const double dx = (x_new - x).norm();
    const double nx = x_new.norm();
    x = x_new;

    const double res = (op.apply(x) - y).norm();
    const double obj = tv_norm(x, config.tv_mode);
    if (config.record_history) history.push_back({obj, res});
    if (res <= feas_limit) tracker.offer(x, obj);

    if (nx > 0 && dx <= config.rel_tol * nx && tracker.found) {
      ++it;
      break;
    }
  }
  return finish(tracker, x, op, y, it, std::move(history), config.tv_mode,
                /*tv_objective=*/true);
}

ReconstructionResult solve_l1_vector(const MeasurementOp& op, const CVec& y, double eps,
                                     const SolverConfig& config) {
  config.validate();
  if (eps < 0) throw std::invalid_argument("solve_l1_vector: eps < 0");
  const Shape s = op.input_shape();
  if (y.size() != op.m())
    throw std::invalid_argument("solve_l1_vector: measurement size mismatch");

  const double op_norm = estimate_op_norm(op, config.power_iters, config.power_seed);
  const double L = 1.05 * std::max(op_norm, 1e-12);
  const double tau = config.step_scale / L;
  const double sig = config.step_scale / L;
  const double eps_eff = std::max(eps, 1e-12 * y.norm());
  const double feas_limit = eps_eff * (1.0 + config.feas_slack);

  CMat x = CMat::Zero(s.rows, s.cols);
  CMat xbar = x;
  CVec q = CVec::Zero(op.m());

  BestTracker tracker;
  std::vector<IterRecord> history;
  if (config.record_history) history.reserve(static_cast<std::size_t>(config.max_iters));
  int it = 0;
  for (; it < config.max_iters; ++it) {
    prox_ball_conjugate(q, CVec(q + sig * op.apply(xbar)), y, sig, eps_eff);

    CMat step = op.adjoint(q);
    if (config.real_valued) step = step.real().cast<Complex>();
    CMat x_new = x - tau * step;
    soft_threshold(x_new, tau);
    xbar = 2.0 * x_new - x;
    const double dx = (x_new - x).norm();
    const double nx = x_new.norm();
    x = x_new;

    const double res = (op.apply(x) - y).norm();
    const double obj = l1_norm(x);
    if (config.record_history) history.push_back({obj, res});
    if (res <= feas_limit) tracker.offer(x, obj);

    if (nx > 0 && dx <= config.rel_tol * nx && tracker.found) {
      ++it;
      break;
    }
  }
  return finish(tracker, x, op, y, it, std::move(history), config.tv_mode,
                /*tv_objective=*/false);
}

ReconstructionResult solve_l1_haar(const MeasurementOp& op, const CVec& y, double eps,
                                   const SolverConfig& config) {
  const Shape s = op.input_shape();
  if (s.rows != s.cols || !is_power_of_two(s.rows))
    throw std::invalid_argument("solve_l1_haar: operator shape must be 2^n x 2^n");
  const OpPtr composed = compose_with_inverse_haar(OpPtr(std::shared_ptr<void>(), &op));
  // Haar coefficients of a real image are real, so the real-valued
  // restriction carries over to coefficient space unchanged.
  ReconstructionResult coeff_res = solve_l1_vector(*composed, y, eps, config);
  ReconstructionResult res;
  res.iterations = coeff_res.iterations;
  res.converged = coeff_res.converged;
  res.history = std::move(coeff_res.history);
  res.objective = coeff_res.objective;  // ||H(Z)||_1
  res.estimate = Image(haar_inverse_mat(coeff_res.estimate.mat()));
  res.residual = (op.apply(res.estimate.mat()) - y).norm();
  return res;
}

}  // namespace tvr
