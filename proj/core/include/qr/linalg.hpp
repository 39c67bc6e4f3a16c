#pragma once

#include <vector>

#include <Eigen/Core>

#include "qr/errors.hpp"

namespace qr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense real symmetric matrix. The stored entries are exactly symmetric:
/// construction replaces M by (M + M^T)/2.
class SymMatrix {
 public:
  explicit SymMatrix(Matrix m);

  int n() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  double operator()(int i, int j) const { return mat_(i, j); }

  static SymMatrix identity(int n) { return SymMatrix(Matrix::Identity(n, n)); }

 private:
  Matrix mat_;
};

/// Lower-triangular factor U with C = U U^T, all diagonal entries positive.
struct CholeskyFactor {
  int n;
  Matrix lower;
};

enum class Which { MIN, MAX };

/// Generalized eigenpair (lambda, v) of a pencil (M, C), normalized so
/// v^T C v = 1. Sign convention: the first component of v with magnitude
/// above 1e-12 is positive.
struct GenEigPair {
  double value;
  Vector vector;
};

/// Cholesky factorization of a symmetric positive definite matrix.
/// Throws NotPositiveDefinite when a pivot falls below
/// 1e-12 * (1 + max|C|).
CholeskyFactor cholesky_spd(const SymMatrix& C);

/// Extreme generalized eigenpair of the pencil (M, C) via the reduction
/// Atil = U^{-1} M U^{-T} with C = U U^T; the triangular systems are solved
/// by substitution.
GenEigPair gen_eigpair(const SymMatrix& M, const CholeskyFactor& C_factor,
                       Which which);

/// Orthonormal basis of the near-null eigenspace of M: eigenvectors whose
/// eigenvalue satisfies |lambda| <= tol * (1 + ||M||_F). May be empty.
std::vector<Vector> kernel_basis(const SymMatrix& M, double tol);

/// Flips v so that its first component with |v_i| > 1e-12 is positive.
void fix_sign(Vector& v);

}  // namespace qr
