#include "qr/linalg.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace qr {

SymMatrix::SymMatrix(Matrix m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("SymMatrix requires a square matrix");
  if (m.rows() < 1) throw DimensionTooSmall("SymMatrix requires n >= 1");
  mat_ = 0.5 * (m + m.transpose()).eval();
  // Force exact symmetry (the average can differ in the last ulp).
  for (int i = 0; i < mat_.rows(); ++i)
    for (int j = 0; j < i; ++j) mat_(j, i) = mat_(i, j);
}

CholeskyFactor cholesky_spd(const SymMatrix& C) {
  const int n = C.n();
  const Matrix& A = C.mat();
  const double pivot_tol = 1e-12 * (1.0 + A.cwiseAbs().maxCoeff());
  Matrix L = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double d = A(j, j) - L.row(j).head(j).squaredNorm();
    if (d <= pivot_tol)
      throw NotPositiveDefinite("matrix is not positive definite (pivot " +
                                std::to_string(d) + " at column " +
                                std::to_string(j) + ")");
    L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i)
      L(i, j) = (A(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / L(j, j);
  }
  return CholeskyFactor{n, std::move(L)};
}

void fix_sign(Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

GenEigPair gen_eigpair(const SymMatrix& M, const CholeskyFactor& C_factor,
                       Which which) {
  const int n = M.n();
  if (n != C_factor.n)
    throw DimensionMismatch("pencil dimension mismatch: M is " +
                            std::to_string(n) + ", C factor is " +
                            std::to_string(C_factor.n));
  const auto U = C_factor.lower.triangularView<Eigen::Lower>();
  // Atil = U^{-1} M U^{-T}, formed by two triangular solves.
  Matrix X = U.solve(M.mat());
  Matrix Atil = U.solve(X.transpose());
  Atil = (0.5 * (Atil + Atil.transpose())).eval();

  Eigen::SelfAdjointEigenSolver<Matrix> es(Atil);
  const int idx = (which == Which::MIN) ? 0 : n - 1;
  const double lambda = es.eigenvalues()(idx);
  Vector w = es.eigenvectors().col(idx);
  Vector v = C_factor.lower.transpose()
                 .triangularView<Eigen::Upper>()
                 .solve(w);
  fix_sign(v);
  return GenEigPair{lambda, std::move(v)};
}

std::vector<Vector> kernel_basis(const SymMatrix& M, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(M.mat());
  const double cutoff = tol * (1.0 + M.mat().norm());
  std::vector<Vector> basis;
  for (int i = 0; i < M.n(); ++i) {
    if (std::abs(es.eigenvalues()(i)) <= cutoff) {
      Vector u = es.eigenvectors().col(i);
      fix_sign(u);
      basis.push_back(std::move(u));
    }
  }
  return basis;
}

}  // namespace qr
