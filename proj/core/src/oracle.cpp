#include "qr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qr/rng.hpp"

namespace qr {

RadialResult radial_min(double a, double b, double alpha, double beta) {
  if (!(alpha > 0.0) || !(alpha < beta))
    throw BadBounds("radial_min requires 0 < alpha < beta");
  const double lo = std::sqrt(alpha);
  const double hi = std::sqrt(beta);
  double r;
  if (a > 0.0) {
    r = std::clamp(b / (2.0 * a), lo, hi);
  } else {
    // h is nonincreasing on r > 0.
    r = hi;
  }
  return RadialResult{r, a * r * r - b * r};
}

OracleResult brute_force(const QrProblem& p, int num_dirs,
                         std::uint64_t seed) {
  NormalSampler rng(seed);

  double best_value = std::numeric_limits<double>::infinity();
  Vector best_x;

  const auto try_direction = [&](Vector d) {
    const double dCd = d.dot(p.C.mat() * d);
    if (!(dCd > 0.0)) return;
    d /= std::sqrt(dCd);
    const double a = d.dot(p.A.mat() * d);
    const double b = std::sqrt(std::max(d.dot(p.B.mat() * d), 0.0));
    const RadialResult r = radial_min(a, b, p.alpha, p.beta);
    if (r.value < best_value) {
      best_value = r.value;
      best_x = r.r_star * d;
    }
  };

  const CholeskyFactor cfac = cholesky_spd(p.C);
  try_direction(gen_eigpair(p.A, cfac, Which::MIN).vector);
  try_direction(gen_eigpair(p.A, cfac, Which::MAX).vector);
  try_direction(gen_eigpair(p.B, cfac, Which::MIN).vector);
  try_direction(gen_eigpair(p.B, cfac, Which::MAX).vector);

  for (int i = 0; i < num_dirs; ++i) {
    Vector d = rng.normal_vector(p.n);
    const double norm = d.norm();
    if (norm == 0.0) continue;
    try_direction(d / norm);
  }
  return OracleResult{std::move(best_x), best_value};
}

}  // namespace qr
