#include "qr/applications.hpp"

#include <cmath>
#include <utility>

#include "qr/oracle.hpp"

namespace qr {

namespace {

// The solver reports the best Frank-Wolfe subproblem point, which always
// sits on one of the annulus boundaries. The applications below need the
// actual minimizer, which may be interior (e.g. when the stationary radius
// falls strictly between the shells). At convergence the minimizer's
// direction is the bottom eigenvector of the final linearization
// M = A - B / (2 sqrt(t)), so re-optimize the radius along that direction
// and keep the result when it improves on the boundary point.
void refine_interior(const QrProblem& p, SolveResult& res) {
  if (res.trace.empty()) return;
  const double t_fin = res.trace.back().t;
  const SymMatrix M(p.A.mat() -
                    p.B.mat() / (2.0 * std::sqrt(t_fin)));
  Vector v = gen_eigpair(M, cholesky_spd(p.C), Which::MIN).vector;
  const double a = v.dot(p.A.mat() * v);
  const double b = std::sqrt(v.dot(p.B.mat() * v));
  const RadialResult radial = radial_min(a, b, p.alpha, p.beta);
  if (radial.value < res.value_best) {
    res.value_best = radial.value;
    res.x_best = radial.r_star * v;
  }
}

}  // namespace

GenEigPair max_eig_via_qr(const SymMatrix& A, const SymMatrix& B,
                          const SymMatrix& C) {
  const CholeskyFactor afac = cholesky_spd(A);  // also verifies A > 0
  const CholeskyFactor cfac = cholesky_spd(C);
  cholesky_spd(B);

  // Rough enclosure of lambda_max(B, A) used only to set the bounds.
  const double probe = gen_eigpair(B, afac, Which::MAX).value;
  const double lam_max_BC = gen_eigpair(B, cfac, Which::MAX).value;
  const double lam_min_BC = gen_eigpair(B, cfac, Which::MIN).value;
  const double alpha = probe * probe / (8.0 * lam_max_BC);
  const double beta = probe * probe / (2.0 * lam_min_BC);

  QrProblem p = validate(A, B, C, alpha, beta);
  SolverConfig config;
  config.stepsize = Stepsize::EXACT_LINE_SEARCH;
  config.gap_tol = 1e-8;
  SolveResult res = solve(p, config);
  refine_interior(p, res);

  const Vector& x = res.x_best;
  const double lambda = 2.0 * std::sqrt(x.dot(B.mat() * x));
  Vector v = x / std::sqrt(x.dot(C.mat() * x));
  fix_sign(v);
  return GenEigPair{lambda, std::move(v)};
}

HcdtResult hcdt_penalty(const SymMatrix& A, const SymMatrix& B,
                        const SymMatrix& C, double alpha, double beta,
                        double rho) {
  if (!(rho > 0.0)) throw BadBounds("penalty parameter rho must be positive");
  SymMatrix A_pen(A.mat() + rho * B.mat());
  SymMatrix B_pen(4.0 * rho * rho * B.mat());
  QrProblem p = validate(std::move(A_pen), std::move(B_pen), C, alpha, beta);
  SolverConfig config;
  config.stepsize = Stepsize::EXACT_LINE_SEARCH;
  config.gap_tol = 1e-8;
  SolveResult res = solve(p, config);
  refine_interior(p, res);
  const double penalty_objective = res.value_best + rho;
  const double residual = std::abs(res.x_best.dot(B.mat() * res.x_best) - 1.0);
  return HcdtResult{std::move(p), std::move(res), penalty_objective, residual};
}

}  // namespace qr
