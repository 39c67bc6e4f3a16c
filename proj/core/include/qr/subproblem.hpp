#pragma once

#include "qr/problem.hpp"

namespace qr {

enum class SubproblemCase { KERNEL, LOWER, UPPER };

/// Exact minimizer of the linearized subproblem
/// min x^T M x over alpha <= x^T C x <= beta, with M = A - B / (2 sqrt(t_k)).
struct SubproblemSolution {
  Vector x_hat;
  double s_hat;
  double t_hat;
  double lambda_g;
  SubproblemCase which_case;
  double value;
};

/// Multipliers certifying a global lower bound on the problem value:
/// A + (lambda2 - lambda1) C - lambda3 B is positive semidefinite and
/// lower_bound = lambda1 * alpha - lambda2 * beta - 1 / (4 lambda3).
struct DualCertificate {
  double lambda1;
  double lambda2;
  double lambda3;
  double lower_bound;
};

struct SubproblemOptions {
  /// When true and the minimum generalized eigenvalue is (numerically)
  /// zero, build an interior point from the kernel of M instead of the
  /// boundary point sqrt(alpha) * v_g.
  bool use_kernel_case = false;
};

/// Solves the linearized subproblem at t_k via one extreme generalized
/// eigenpair of the pencil (M, C). The sign of the eigenvalue selects the
/// active boundary: lambda_g >= 0 puts the minimizer on x^T C x = alpha,
/// lambda_g < 0 on x^T C x = beta.
SubproblemSolution solve_gp(const QrProblem& p, double t_k,
                            const SubproblemOptions& opts = {});

/// Same, reusing a precomputed Cholesky factor of C.
SubproblemSolution solve_gp(const QrProblem& p, double t_k,
                            const CholeskyFactor& C_factor,
                            const SubproblemOptions& opts = {});

/// Dual certificate at t_k given the minimum generalized eigenvalue of
/// (M, C): lambda3 = 1/(2 sqrt(t_k)), the annulus multiplier matches the
/// sign of lambda_g, and the bound equals v(GP_k) - sqrt(t_k)/2.
DualCertificate dual_certificate(const QrProblem& p, double t_k,
                                 double lambda_g);

}  // namespace qr
