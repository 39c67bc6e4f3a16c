#pragma once

#include "qr/solver.hpp"

namespace qr {

/// Recovers the largest generalized eigenvalue of (B, A), with A, B, C all
/// positive definite, by solving the annulus problem whose minimizer x*
/// satisfies lambda_max(B, A) = 2 sqrt(x*^T B x*). The annulus bounds are
/// enclosed with a safety factor of 2 around a direct eigensolve probe.
GenEigPair max_eig_via_qr(const SymMatrix& A, const SymMatrix& B,
                          const SymMatrix& C);

/// Penalty reformulation of x^T A x subject to x^T B x = 1 on the annulus:
/// the penalized objective x^T (A + rho B) x - sqrt(x^T (4 rho^2 B) x) + rho
/// is an annulus problem instance.
struct HcdtResult {
  QrProblem instance;
  SolveResult result;
  double penalty_objective;    // solver value + rho
  double constraint_residual;  // |x_best^T B x_best - 1|
};

HcdtResult hcdt_penalty(const SymMatrix& A, const SymMatrix& B,
                        const SymMatrix& C, double alpha, double beta,
                        double rho);

}  // namespace qr
