#include <doctest.h>

#include <cmath>

#include "qr/oracle.hpp"
#include "qr/solver.hpp"
#include "test_util.hpp"

using namespace qr;

TEST_CASE("radial_min: clamped, decreasing and interior-vertex cases") {
  auto r = radial_min(1, 1, 1, 10);
  CHECK(r.r_star == doctest::Approx(1.0));
  CHECK(r.value == doctest::Approx(0.0));

  r = radial_min(-1, 1, 1, 10);
  CHECK(r.r_star == doctest::Approx(std::sqrt(10.0)));
  CHECK(r.value == doctest::Approx(-10.0 - std::sqrt(10.0)));

  r = radial_min(1, 4, 1, 10);
  CHECK(r.r_star == doctest::Approx(2.0));
  CHECK(r.value == doctest::Approx(-4.0));

  CHECK_THROWS_AS(radial_min(1, 1, 10, 1), BadBounds);
}

TEST_CASE("radial_min: matches a grid scan") {
  NormalSampler rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = rng.normal();
    const double b = std::abs(rng.normal());
    const double alpha = 0.1 + rng.uniform();
    const double beta = alpha + 0.1 + 5.0 * rng.uniform();
    const auto res = radial_min(a, b, alpha, beta);
    const double lo = std::sqrt(alpha), hi = std::sqrt(beta);
    double grid_best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 10000; ++i) {
      const double r = lo + (hi - lo) * i / 10000.0;
      grid_best = std::min(grid_best, a * r * r - b * r);
    }
    const double resolution = (hi - lo) / 10000.0;
    CHECK(res.value <= grid_best + 1e-12);
    CHECK(res.value >= grid_best - (std::abs(a) + b) * resolution);
    // Closed-form candidates dominate the returned point.
    for (double r : {lo, hi, std::clamp(b / (2 * std::max(a, 1e-300)), lo, hi)})
      CHECK(res.value <= a * r * r - b * r + 1e-12);
  }
}

TEST_CASE("brute_force: isotropic instance is exactly zero") {
  const QrProblem p = qrtest::identity_instance();
  const auto res = brute_force(p, 100, 1);
  CHECK(res.value == doctest::Approx(0.0));
  CHECK(feasibility(p, res.x, 1e-8) != Feasibility::INFEASIBLE);
}

TEST_CASE("brute_force: axis-aligned optimum found via eigenvector candidate") {
  const QrProblem p = qrtest::indefinite_instance();
  const auto res = brute_force(p, 1000, 1);
  CHECK(res.value == doctest::Approx(-6.0).epsilon(1e-10));
  CHECK(feasibility(p, res.x, 1e-8) != Feasibility::INFEASIBLE);
}

TEST_CASE("brute_force: deterministic in seed") {
  const QrProblem p = random_instance(5, 8, 1.0, 10.0);
  const auto a = brute_force(p, 5000, 3);
  const auto b = brute_force(p, 5000, 3);
  CHECK(a.value == b.value);
  CHECK((a.x - b.x).norm() == 0.0);
}

TEST_CASE("brute_force: never beats the solver beyond tolerance") {
  for (int inst = 0; inst < 10; ++inst) {
    const int n = 3 + inst % 6;
    const QrProblem p = random_instance(n, 600 + inst, 1.0, 10.0);
    SolverConfig config;
    config.gap_tol = 1e-8;
    const SolveResult res = solve(p, config);
    const auto oracle = brute_force(p, 50000, 600 + inst);
    CHECK(oracle.value >= res.lower_bound_best - 1e-6);
    CHECK(oracle.value >= res.value_best - 1e-6);
  }
}
