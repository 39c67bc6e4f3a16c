#include <doctest.h>

#include <cmath>

#include "qr/oracle.hpp"
#include "qr/problem.hpp"
#include "test_util.hpp"

using namespace qr;
using qrtest::diag;

TEST_CASE("validate: accepts the identity instance") {
  CHECK_NOTHROW(qrtest::identity_instance());
}

TEST_CASE("validate: rejects reversed bounds") {
  CHECK_THROWS_AS(validate(SymMatrix::identity(3), SymMatrix::identity(3),
                           SymMatrix::identity(3), 10.0, 1.0),
                  BadBounds);
}

TEST_CASE("validate: rejects singular B") {
  CHECK_THROWS_AS(validate(SymMatrix::identity(3), diag({1, 1, 0}),
                           SymMatrix::identity(3), 1.0, 10.0),
                  NotPositiveDefinite);
}

TEST_CASE("validate: rejects n < 3") {
  CHECK_THROWS_AS(validate(SymMatrix::identity(2), SymMatrix::identity(2),
                           SymMatrix::identity(2), 1.0, 10.0),
                  DimensionTooSmall);
}

TEST_CASE("objective: direct evaluations") {
  const QrProblem p = qrtest::identity_instance();
  CHECK(objective(p, Vector::Unit(3, 0)) == doctest::Approx(0.0));
  CHECK(objective(p, 2.0 * Vector::Unit(3, 0)) == doctest::Approx(2.0));
  const QrProblem q = validate(diag({-1, 1, 1}), SymMatrix::identity(3),
                               SymMatrix::identity(3), 1.0, 10.0);
  CHECK(objective(q, 2.0 * Vector::Unit(3, 0)) == doctest::Approx(-6.0));
}

TEST_CASE("objective: scaling identity used by the radial oracle") {
  NormalSampler rng(3);
  const QrProblem p = random_instance(5, 17, 1.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    const Vector x = rng.normal_vector(5);
    const double c = 0.1 + 3.0 * rng.uniform();
    const double s = x.dot(p.A.mat() * x);
    const double b = std::sqrt(x.dot(p.B.mat() * x));
    CHECK(objective(p, c * x) ==
          doctest::Approx(c * c * s - c * b).epsilon(1e-10));
  }
}

TEST_CASE("feasibility: classification against the annulus") {
  const QrProblem p = qrtest::identity_instance();
  Vector x = Vector::Zero(3);
  x(0) = std::sqrt(5.0);
  CHECK(feasibility(p, x, 1e-10) == Feasibility::INTERIOR);
  CHECK(feasibility(p, Vector::Unit(3, 0), 1e-10) ==
        Feasibility::LOWER_BOUNDARY);
  CHECK(feasibility(p, Vector::Zero(3), 1e-10) == Feasibility::INFEASIBLE);
}

TEST_CASE("constants: identity instance") {
  const auto c = constants(qrtest::identity_instance());
  CHECK(c.s_max == doctest::Approx(10.0));
  CHECK(c.s_min == doctest::Approx(1.0));
  CHECK(c.t_max == doctest::Approx(10.0));
  CHECK(c.t_min == doctest::Approx(1.0));
  CHECK(c.L == doctest::Approx(0.25));
  CHECK(c.D == doctest::Approx(9.0 * std::sqrt(2.0)));
}

TEST_CASE("constants: negative-eigenvalue branch for s_max") {
  const QrProblem p =
      validate(SymMatrix(-Matrix::Identity(3, 3)), SymMatrix::identity(3),
               SymMatrix::identity(3), 1.0, 10.0);
  const auto c = constants(p);
  CHECK(c.s_max == doctest::Approx(-1.0));
  CHECK(c.s_min == doctest::Approx(-10.0));
  CHECK(c.L == doctest::Approx(0.25));
  CHECK(c.D == doctest::Approx(9.0 * std::sqrt(2.0)));
}

TEST_CASE("constants: scaled B changes t_min and L") {
  const QrProblem p =
      validate(SymMatrix::identity(3), SymMatrix(4.0 * Matrix::Identity(3, 3)),
               SymMatrix::identity(3), 1.0, 10.0);
  const auto c = constants(p);
  CHECK(c.t_min == doctest::Approx(4.0));
  CHECK(c.L == doctest::Approx(1.0 / 32.0));
}

TEST_CASE("constants: envelope contains the quadratic values") {
  NormalSampler rng(41);
  for (int inst = 0; inst < 5; ++inst) {
    const QrProblem p = random_instance(6, 100 + inst, 1.0, 10.0);
    const auto c = constants(p);
    for (int i = 0; i < 10000; ++i) {
      const Vector x = qrtest::random_feasible(p, rng);
      const double s = x.dot(p.A.mat() * x);
      const double t = x.dot(p.B.mat() * x);
      CHECK(s >= c.s_min - 1e-8);
      CHECK(s <= c.s_max + 1e-8);
      CHECK(t >= c.t_min - 1e-8);
      CHECK(t <= c.t_max + 1e-8);
    }
  }
}

TEST_CASE("alpha_zero_bound: identity matrices") {
  const auto red = alpha_zero_bound(SymMatrix::identity(3),
                                    SymMatrix::identity(3),
                                    SymMatrix::identity(3), 10.0);
  CHECK(red.fbar == doctest::Approx(-0.25));
  CHECK(red.alpha_bar == doctest::Approx(0.25));
  const QrProblem p = reduce_alpha_zero(SymMatrix::identity(3),
                                        SymMatrix::identity(3),
                                        SymMatrix::identity(3), 10.0);
  CHECK(p.alpha == doctest::Approx(1.0 / 16.0));
  CHECK(p.beta == doctest::Approx(10.0));
}

TEST_CASE("alpha_zero_bound: negative definite A") {
  const auto red =
      alpha_zero_bound(SymMatrix(-Matrix::Identity(3, 3)),
                       SymMatrix::identity(3), SymMatrix::identity(3), 4.0);
  CHECK(red.fbar == doctest::Approx(-6.0));
  CHECK(red.alpha_bar == doctest::Approx(2.0));
}

TEST_CASE("alpha_zero_bound: zero A uses the second fbar branch") {
  const auto red =
      alpha_zero_bound(SymMatrix(Matrix::Zero(3, 3)), SymMatrix::identity(3),
                       SymMatrix::identity(3), 1.0);
  CHECK(red.fbar == doctest::Approx(-1.0));
  CHECK(red.alpha_bar == doctest::Approx(1.0));
}

TEST_CASE("reduce_alpha_zero: reduction preserves the optimum on random "
          "instances") {
  // Radial oracle for the alpha = 0 problem: along each C-normalized
  // direction minimize a r^2 - b r over [0, sqrt(beta)].
  const double beta = 10.0;
  for (int inst = 0; inst < 5; ++inst) {
    const int n = 3 + inst % 4;
    const QrProblem base = random_instance(n, 300 + inst, 1.0, beta);
    const auto red = alpha_zero_bound(base.A, base.B, base.C, beta);
    const QrProblem reduced = reduce_alpha_zero(base.A, base.B, base.C, beta);

    NormalSampler rng(900 + inst);
    double best0 = 0.0;  // r = 0 is always feasible with value 0
    double best0_xCx = 0.0;
    const auto try_dir = [&](Vector d) {
      d /= std::sqrt(d.dot(base.C.mat() * d));
      const double a = d.dot(base.A.mat() * d);
      const double b = std::sqrt(d.dot(base.B.mat() * d));
      double r;
      if (a > 0.0)
        r = std::clamp(b / (2.0 * a), 0.0, std::sqrt(beta));
      else
        r = std::sqrt(beta);
      const double value = a * r * r - b * r;
      if (value < best0) {
        best0 = value;
        best0_xCx = r * r;
      }
    };
    // Same candidate set the library oracle uses: extreme generalized
    // eigenvectors first, then sampled directions.
    const CholeskyFactor cfac = cholesky_spd(base.C);
    try_dir(gen_eigpair(base.A, cfac, Which::MIN).vector);
    try_dir(gen_eigpair(base.A, cfac, Which::MAX).vector);
    try_dir(gen_eigpair(base.B, cfac, Which::MIN).vector);
    try_dir(gen_eigpair(base.B, cfac, Which::MAX).vector);
    for (int i = 0; i < 50000; ++i) try_dir(rng.normal_vector(n));
    // Any near-minimizer stays away from the origin by alpha_bar^2.
    CHECK(best0_xCx >= red.alpha_bar * red.alpha_bar - 1e-6);
    // The reduced problem sees the same optimum.
    const OracleResult reduced_oracle = brute_force(reduced, 50000, 900 + inst);
    CHECK(std::abs(best0 - reduced_oracle.value) <=
          1e-6 * (1.0 + std::abs(best0)));
  }
}

TEST_CASE("random_instance: deterministic and well-posed") {
  const QrProblem a = random_instance(20, 42, 1.0, 10.0);
  const QrProblem b = random_instance(20, 42, 1.0, 10.0);
  CHECK((a.A.mat() - b.A.mat()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.B.mat() - b.B.mat()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.C.mat() - b.C.mat()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_NOTHROW(cholesky_spd(a.B));
  CHECK_NOTHROW(cholesky_spd(a.C));
  const QrProblem c = random_instance(3, 7, 1.0, 10.0);
  CHECK((c.A.mat() - c.A.mat().transpose().eval()).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK_THROWS_AS(random_instance(2, 1, 1.0, 10.0), DimensionTooSmall);
  CHECK_THROWS_AS(random_instance(5, 1, 10.0, 1.0), BadBounds);
}

TEST_CASE("initial_point: eigenvalue of C inside the bounds") {
  const QrProblem p = validate(SymMatrix::identity(3), SymMatrix::identity(3),
                               diag({2, 20, 30}), 1.0, 10.0);
  const Vector x0 = initial_point(p);
  CHECK((x0 - Vector::Unit(3, 0)).norm() < 1e-12);
}

TEST_CASE("initial_point: fallback midpoint scaling") {
  const QrProblem p = qrtest::identity_instance();
  const Vector x0 = initial_point(p);
  CHECK(x0.dot(p.C.mat() * x0) == doctest::Approx(5.5));
}

TEST_CASE("initial_point: always feasible on random instances") {
  for (int i = 0; i < 100; ++i) {
    const QrProblem p = random_instance(3 + i % 10, 1000 + i, 1.0, 10.0);
    const Vector x0 = initial_point(p);
    const double v = x0.dot(p.C.mat() * x0);
    CHECK(v >= p.alpha - 1e-10);
    CHECK(v <= p.beta + 1e-10);
  }
}
