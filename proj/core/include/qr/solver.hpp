#pragma once

#include <vector>

#include "qr/problem.hpp"
#include "qr/subproblem.hpp"

namespace qr {

enum class Stepsize { DIMINISHING, EXACT_LINE_SEARCH };
enum class Termination { GAP, MAX_ITER };

struct SolverConfig {
  Stepsize stepsize = Stepsize::EXACT_LINE_SEARCH;
  double gap_tol = 1e-6;
  int max_iter = 2000;
  bool record_trace = true;
};

struct IterationRecord {
  int k;
  double s;
  double t;
  double f;            // s - sqrt(t)
  double gamma;        // step taken this iteration; 0 on the stopping one
  double gap;
  double q_xhat;
  double lower_bound;
  double lambda_g;
  double delta_k;
};

struct SolveResult {
  Vector x_best;
  double value_best;        // min over k of q(x_hat_k)
  double lower_bound_best;  // max over k of the dual bound
  int iterations;
  Termination terminated_by;
  double last_step_gamma;   // gamma of the final update actually performed
  double final_gap;
  std::vector<IterationRecord> trace;
};

double diminishing_step(int k);

/// Exact minimizer of phi(gamma) = (1-gamma) s + gamma s_hat
/// - sqrt((1-gamma) t + gamma t_hat) over [0, 1].
double exact_linesearch(double s, double t, double s_hat, double t_hat);

/// Frank-Wolfe gap s - s_hat + t_hat / (2 sqrt(t)) - sqrt(t) / 2.
double fw_gap(double s, double t, double s_hat, double t_hat);

/// Approximation guarantee for the k-th subproblem solution:
/// (t_max / t_min) * sqrt(L D^2 sqrt(t_max) / (k + 2)).
double delta_bound(const SmoothnessConstants& c, int k);

/// O(1/k) primal rate 2 L D^2 / (k + 2).
double primal_bound(const SmoothnessConstants& c, int k);

/// Runs the main loop: at each k solves the linearized subproblem by one
/// minimum generalized eigenpair, records gap / objective / dual bound, and
/// updates the hidden iterate (s, t) by a convex-combination step.
SolveResult solve(const QrProblem& p, const SolverConfig& config = {});

}  // namespace qr
