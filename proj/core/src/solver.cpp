#include "qr/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qr {

double diminishing_step(int k) { return 2.0 / (k + 2); }

double exact_linesearch(double s, double t, double s_hat, double t_hat) {
  const double ds = s_hat - s;
  const double dt = t_hat - t;
  if (ds == 0.0 && dt == 0.0) return 0.0;
  if (dt == 0.0) return ds < 0.0 ? 1.0 : 0.0;
  if (ds == 0.0) return dt > 0.0 ? 1.0 : 0.0;
  if (ds > 0.0 && dt < 0.0) return 0.0;
  if (ds < 0.0 && dt > 0.0) return 1.0;
  // ds and dt share a sign: the stationary point of phi is valid.
  const double gamma = dt / (4.0 * ds * ds) - t / dt;
  return std::clamp(gamma, 0.0, 1.0);
}

double fw_gap(double s, double t, double s_hat, double t_hat) {
  const double rt = std::sqrt(t);
  return s - s_hat + t_hat / (2.0 * rt) - rt / 2.0;
}

double delta_bound(const SmoothnessConstants& c, int k) {
  return (c.t_max / c.t_min) *
         std::sqrt(c.L * c.D * c.D * std::sqrt(c.t_max) / (k + 2));
}

double primal_bound(const SmoothnessConstants& c, int k) {
  return 2.0 * c.L * c.D * c.D / (k + 2);
}

SolveResult solve(const QrProblem& p, const SolverConfig& config) {
  if (!(config.gap_tol > 0.0))
    throw BadBounds("gap tolerance must be positive");
  if (config.max_iter < 1) throw BadBounds("max_iter must be at least 1");

  const CholeskyFactor cfac = cholesky_spd(p.C);
  const SmoothnessConstants consts = constants(p);
  const double t_floor = consts.t_min * (1.0 - 1e-12);

  const Vector x0 = initial_point(p);
  double s = x0.dot(p.A.mat() * x0);
  double t = x0.dot(p.B.mat() * x0);

  SolveResult result;
  result.value_best = std::numeric_limits<double>::infinity();
  result.lower_bound_best = -std::numeric_limits<double>::infinity();
  result.last_step_gamma = 0.0;
  result.x_best = x0;

  for (int k = 1; k <= config.max_iter; ++k) {
    SubproblemSolution sub = solve_gp(p, t, cfac);
    const double q_hat = sub.s_hat - std::sqrt(sub.t_hat);
    const double lb = dual_certificate(p, t, sub.lambda_g).lower_bound;
    const double gap = fw_gap(s, t, sub.s_hat, sub.t_hat);

    if (q_hat < result.value_best) {
      result.value_best = q_hat;
      result.x_best = sub.x_hat;
    }
    result.lower_bound_best = std::max(result.lower_bound_best, lb);

    IterationRecord rec{k,   s,     t,  s - std::sqrt(t), 0.0,
                        gap, q_hat, lb, sub.lambda_g,
                        delta_bound(consts, k)};

    const bool stop_gap = gap <= config.gap_tol;
    const bool stop_iter = k == config.max_iter;
    if (!stop_gap && !stop_iter) {
      const double gamma = (config.stepsize == Stepsize::DIMINISHING)
                               ? diminishing_step(k)
                               : exact_linesearch(s, t, sub.s_hat, sub.t_hat);
      rec.gamma = gamma;
      result.last_step_gamma = gamma;
      s += gamma * (sub.s_hat - s);
      t += gamma * (sub.t_hat - t);
      t = std::max(t, t_floor);
    }
    if (config.record_trace) result.trace.push_back(std::move(rec));
    if (stop_gap || stop_iter) {
      result.iterations = k;
      result.terminated_by = stop_gap ? Termination::GAP : Termination::MAX_ITER;
      result.final_gap = gap;
      break;
    }
  }
  return result;
}

}  // namespace qr
