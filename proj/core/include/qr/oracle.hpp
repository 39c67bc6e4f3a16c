#pragma once

#include <cstdint>
#include <utility>

#include "qr/problem.hpp"

namespace qr {

/// Minimizer of h(r) = a r^2 - b r over r in [sqrt(alpha), sqrt(beta)],
/// the restriction of the objective to a C-normalized ray.
struct RadialResult {
  double r_star;
  double value;
};

RadialResult radial_min(double a, double b, double alpha, double beta);

struct OracleResult {
  Vector x;
  double value;
};

/// Brute-force upper bound on the optimal value: samples num_dirs directions
/// on the unit sphere (deterministic in seed), C-normalizes each, minimizes
/// radially in closed form, and also tries the extreme generalized
/// eigenvectors of (A, C) and (B, C) so axis-aligned optima are hit exactly.
OracleResult brute_force(const QrProblem& p, int num_dirs,
                         std::uint64_t seed);

}  // namespace qr
