#include "qr/problem.hpp"

#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "qr/rng.hpp"

namespace qr {

double HiddenPoint::f() const { return s - std::sqrt(t); }

QrProblem validate(SymMatrix A, SymMatrix B, SymMatrix C, double alpha,
                   double beta) {
  const int n = A.n();
  if (B.n() != n || C.n() != n)
    throw DimensionMismatch("A, B, C must share the same dimension");
  if (n < 3)
    throw DimensionTooSmall("dimension must be at least 3, got " +
                            std::to_string(n));
  if (!(alpha > 0.0) || !(alpha < beta) || !std::isfinite(beta))
    throw BadBounds("bounds must satisfy 0 < alpha < beta < inf");
  try {
    cholesky_spd(B);
  } catch (const NotPositiveDefinite&) {
    throw NotPositiveDefinite("B must be positive definite");
  }
  try {
    cholesky_spd(C);
  } catch (const NotPositiveDefinite&) {
    throw NotPositiveDefinite("C must be positive definite");
  }
  return QrProblem{std::move(A), std::move(B), std::move(C), alpha, beta, n};
}

double objective(const QrProblem& p, const Vector& x) {
  const double s = x.dot(p.A.mat() * x);
  const double t = x.dot(p.B.mat() * x);
  return s - std::sqrt(std::max(t, 0.0));
}

Feasibility feasibility(const QrProblem& p, const Vector& x, double tol) {
  const double v = x.dot(p.C.mat() * x);
  const double eps = tol * (1.0 + p.beta);
  if (std::abs(v - p.alpha) <= eps) return Feasibility::LOWER_BOUNDARY;
  if (std::abs(v - p.beta) <= eps) return Feasibility::UPPER_BOUNDARY;
  if (v < p.alpha || v > p.beta) return Feasibility::INFEASIBLE;
  return Feasibility::INTERIOR;
}

SmoothnessConstants constants(const QrProblem& p) {
  const CholeskyFactor cfac = cholesky_spd(p.C);
  const double lam_min_AC = gen_eigpair(p.A, cfac, Which::MIN).value;
  const double lam_max_AC = gen_eigpair(p.A, cfac, Which::MAX).value;
  const double lam_min_BC = gen_eigpair(p.B, cfac, Which::MIN).value;
  const double lam_max_BC = gen_eigpair(p.B, cfac, Which::MAX).value;

  const double s_max =
      (lam_max_AC >= 0.0) ? lam_max_AC * p.beta : lam_max_AC * p.alpha;
  const double s_min =
      (lam_min_AC >= 0.0) ? lam_min_AC * p.alpha : lam_min_AC * p.beta;
  const double t_max = lam_max_BC * p.beta;
  const double t_min = lam_min_BC * p.alpha;
  const double L = 1.0 / (4.0 * std::pow(t_min, 1.5));
  const double D = std::hypot(s_max - s_min, t_max - t_min);
  return SmoothnessConstants{L,     D,     s_min,      s_max,      t_min,
                             t_max, lam_min_BC, lam_max_BC, lam_min_AC,
                             lam_max_AC};
}

AlphaZeroReduction alpha_zero_bound(const SymMatrix& A, const SymMatrix& B,
                                    const SymMatrix& C, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw BadBounds("beta must be positive and finite");
  const CholeskyFactor cfac = cholesky_spd(C);
  cholesky_spd(B);
  const double lam_max_AC = gen_eigpair(A, cfac, Which::MAX).value;
  const double lam_min_AC = gen_eigpair(A, cfac, Which::MIN).value;
  const double lam_min_BC = gen_eigpair(B, cfac, Which::MIN).value;
  const double lam_max_BC = gen_eigpair(B, cfac, Which::MAX).value;

  double fbar;
  if (lam_max_AC > 0.0 &&
      std::sqrt(lam_min_BC) / (2.0 * lam_max_AC) <= std::sqrt(beta)) {
    fbar = -lam_min_BC / (4.0 * lam_max_AC);
  } else {
    fbar = lam_max_AC * beta - std::sqrt(lam_min_BC * beta);
  }
  if (fbar >= 0.0)
    throw NonNegativeFbar("computed fbar = " + std::to_string(fbar) +
                          " is not negative");

  double alpha_bar;
  if (lam_min_AC >= 0.0) {
    alpha_bar = -fbar / std::sqrt(lam_max_BC);
  } else {
    alpha_bar = (std::sqrt(lam_max_BC) -
                 std::sqrt(lam_max_BC + 4.0 * lam_min_AC * fbar)) /
                (2.0 * lam_min_AC);
  }
  return AlphaZeroReduction{fbar, alpha_bar};
}

QrProblem reduce_alpha_zero(const SymMatrix& A, const SymMatrix& B,
                            const SymMatrix& C, double beta) {
  const AlphaZeroReduction red = alpha_zero_bound(A, B, C, beta);
  // alpha_bar bounds sqrt(x*^T C x*), so alpha_bar^2 is the safe lower
  // bound on x^T C x.
  return validate(A, B, C, red.alpha_bar * red.alpha_bar, beta);
}

QrProblem random_instance(int n, std::uint64_t seed, double alpha,
                          double beta) {
  if (n < 3) throw DimensionTooSmall("dimension must be at least 3");
  if (!(alpha > 0.0) || !(alpha < beta))
    throw BadBounds("bounds must satisfy 0 < alpha < beta");
  NormalSampler rng(seed);
  Matrix R = rng.normal_matrix(n, n);
  Matrix W = rng.normal_matrix(n, n);
  Matrix V = rng.normal_matrix(n, n);
  SymMatrix A(0.5 * (R + R.transpose()));
  SymMatrix B(W * W.transpose() / n + Matrix::Identity(n, n));
  SymMatrix C(V * V.transpose() / n + Matrix::Identity(n, n));
  return validate(std::move(A), std::move(B), std::move(C), alpha, beta);
}

Vector initial_point(const QrProblem& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(p.C.mat());
  for (int i = 0; i < p.n; ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam > p.alpha && lam < p.beta) {
      Vector v = es.eigenvectors().col(i);
      fix_sign(v);
      return v;
    }
  }
  // No eigenvalue of C inside (alpha, beta): scale e1 to the midpoint.
  Vector x = Vector::Zero(p.n);
  x(0) = std::sqrt(0.5 * (p.alpha + p.beta) / p.C(0, 0));
  return x;
}

}  // namespace qr
