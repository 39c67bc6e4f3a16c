#pragma once

#include <cstdint>

#include "qr/linalg.hpp"

namespace qr {

/// A validated problem instance: minimize x^T A x - sqrt(x^T B x) subject to
/// alpha <= x^T C x <= beta, with B, C positive definite, 0 < alpha < beta
/// and n >= 3.
struct QrProblem {
  SymMatrix A;
  SymMatrix B;
  SymMatrix C;
  double alpha;
  double beta;
  int n;
};

/// Constants controlling the O(1/k) rate and the a-priori range of the
/// hidden iterates (s, t) = (x^T A x, x^T B x) over the feasible set.
struct SmoothnessConstants {
  double L;
  double D;
  double s_min;
  double s_max;
  double t_min;
  double t_max;
  double lam_min_BC;
  double lam_max_BC;
  double lam_min_AC;
  double lam_max_AC;
};

/// A point in the hidden 2-D space: s = x^T A x, t = x^T B x (> 0).
struct HiddenPoint {
  double s;
  double t;
  double f() const;
};

enum class Feasibility { INTERIOR, LOWER_BOUNDARY, UPPER_BOUNDARY, INFEASIBLE };

/// Lower-bound reduction data for the alpha = 0 case: fbar is a negative
/// upper bound on the optimal value, alpha_bar bounds sqrt(x*^T C x*) from
/// below at any minimizer.
struct AlphaZeroReduction {
  double fbar;
  double alpha_bar;
};

QrProblem validate(SymMatrix A, SymMatrix B, SymMatrix C, double alpha,
                   double beta);

double objective(const QrProblem& p, const Vector& x);

Feasibility feasibility(const QrProblem& p, const Vector& x, double tol);

SmoothnessConstants constants(const QrProblem& p);

/// Computes (fbar, alpha_bar) for the alpha = 0 problem over
/// 0 <= x^T C x <= beta. Throws NonNegativeFbar when fbar >= 0.
AlphaZeroReduction alpha_zero_bound(const SymMatrix& A, const SymMatrix& B,
                                    const SymMatrix& C, double beta);

/// Replaces the degenerate lower bound alpha = 0 by alpha_bar^2, which is
/// implied at every minimizer, and returns the equivalent problem.
QrProblem reduce_alpha_zero(const SymMatrix& A, const SymMatrix& B,
                            const SymMatrix& C, double beta);

/// Deterministic random instance: A = (R + R^T)/2 with R standard normal,
/// B = W W^T / n + I, C = V V^T / n + I.
QrProblem random_instance(int n, std::uint64_t seed, double alpha, double beta);

/// Feasible starting point: the unit eigenvector of C whose eigenvalue lies
/// strictly in (alpha, beta), or a scaled coordinate vector hitting
/// x^T C x = (alpha + beta)/2 when no such eigenvalue exists.
Vector initial_point(const QrProblem& p);

}  // namespace qr
