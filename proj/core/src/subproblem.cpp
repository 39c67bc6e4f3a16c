#include "qr/subproblem.hpp"

#include <cmath>
#include <utility>

namespace qr {

namespace {

SubproblemSolution finish(const QrProblem& p, Vector x, double lambda_g,
                          SubproblemCase which_case, double value) {
  const double s_hat = x.dot(p.A.mat() * x);
  const double t_hat = x.dot(p.B.mat() * x);
  return SubproblemSolution{std::move(x), s_hat, t_hat, lambda_g, which_case,
                            value};
}

}  // namespace

SubproblemSolution solve_gp(const QrProblem& p, double t_k,
                            const SubproblemOptions& opts) {
  return solve_gp(p, t_k, cholesky_spd(p.C), opts);
}

SubproblemSolution solve_gp(const QrProblem& p, double t_k,
                            const CholeskyFactor& C_factor,
                            const SubproblemOptions& opts) {
  if (!(t_k > 0.0)) throw NonPositiveT("t_k must be positive");
  SymMatrix M(p.A.mat() - p.B.mat() / (2.0 * std::sqrt(t_k)));
  const GenEigPair pair = gen_eigpair(M, C_factor, Which::MIN);
  const double lambda_g = pair.value;

  if (opts.use_kernel_case) {
    const double eps0 = 1e-9 * (1.0 + M.mat().norm());
    if (std::abs(lambda_g) <= eps0) {
      const auto basis = kernel_basis(M, 1e-9);
      if (!basis.empty()) {
        const Vector& u = basis.front();
        const double uCu = u.dot(p.C.mat() * u);
        const double target = 0.5 * (p.alpha + p.beta);
        Vector x = std::sqrt(target / uCu) * u;
        return finish(p, std::move(x), lambda_g, SubproblemCase::KERNEL, 0.0);
      }
    }
  }

  if (lambda_g >= 0.0) {
    Vector x = std::sqrt(p.alpha) * pair.vector;
    return finish(p, std::move(x), lambda_g, SubproblemCase::LOWER,
                  lambda_g * p.alpha);
  }
  Vector x = std::sqrt(p.beta) * pair.vector;
  return finish(p, std::move(x), lambda_g, SubproblemCase::UPPER,
                lambda_g * p.beta);
}

DualCertificate dual_certificate(const QrProblem& p, double t_k,
                                 double lambda_g) {
  if (!(t_k > 0.0)) throw NonPositiveT("t_k must be positive");
  const double lambda3 = 1.0 / (2.0 * std::sqrt(t_k));
  const double lambda1 = std::max(lambda_g, 0.0);
  const double lambda2 = std::max(-lambda_g, 0.0);
  const double lower_bound =
      lambda1 * p.alpha - lambda2 * p.beta - 1.0 / (4.0 * lambda3);
  return DualCertificate{lambda1, lambda2, lambda3, lower_bound};
}

}  // namespace qr
