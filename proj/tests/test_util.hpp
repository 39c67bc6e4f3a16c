#pragma once

#include <Eigen/Dense>

#include "qr/linalg.hpp"
#include "qr/problem.hpp"
#include "qr/rng.hpp"

namespace qrtest {

inline qr::SymMatrix diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return qr::SymMatrix(v.asDiagonal().toDenseMatrix());
}

inline qr::SymMatrix random_symmetric(int n, qr::NormalSampler& rng) {
  qr::Matrix R = rng.normal_matrix(n, n);
  return qr::SymMatrix(0.5 * (R + R.transpose()));
}

inline qr::SymMatrix random_spd(int n, qr::NormalSampler& rng) {
  qr::Matrix W = rng.normal_matrix(n, n);
  return qr::SymMatrix(W * W.transpose() / n +
                       qr::Matrix::Identity(n, n));
}

// A=B=C=I3, alpha=1, beta=10: analytic optimum min r^2 - r = 0 at r = 1.
inline qr::QrProblem identity_instance() {
  return qr::validate(qr::SymMatrix::identity(3), qr::SymMatrix::identity(3),
                      qr::SymMatrix::identity(3), 1.0, 10.0);
}

// A=diag(-1,1,1), B=C=I3, alpha=1, beta=4: optimum -6 at x = +/-2 e1.
inline qr::QrProblem indefinite_instance() {
  return qr::validate(diag({-1, 1, 1}), qr::SymMatrix::identity(3),
                      qr::SymMatrix::identity(3), 1.0, 4.0);
}

// Random x with x^T C x uniform in [alpha, beta].
inline qr::Vector random_feasible(const qr::QrProblem& p,
                                  qr::NormalSampler& rng) {
  qr::Vector d = rng.normal_vector(p.n);
  const double dCd = d.dot(p.C.mat() * d);
  const double target = p.alpha + rng.uniform() * (p.beta - p.alpha);
  return std::sqrt(target / dCd) * d;
}

}  // namespace qrtest
