#include "vmfp/grid.hpp"

#include <cmath>
#include <string>

namespace vmfp {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

PhaseGrid::PhaseGrid(int nx_, double x_len_, int nv_, double v_max_)
    : nx(nx_), x_len(x_len_), nv(nv_), v_max(v_max_) {
  if (!is_pow2(nx) || !is_pow2(nv))
    throw hypothesis_violation("grid sizes must be powers of two, got nx=" +
                               std::to_string(nx) + " nv=" + std::to_string(nv));
  if (!(x_len > 0.0) || !(v_max > 0.0))
    throw hypothesis_violation("grid extents must be positive");
  dx = x_len / nx;
  dv = 2.0 * v_max / nv;
}

double WeightSpec::operator()(double v1, double v2) const {
  switch (kind) {
    case WeightKind::v0_power:
      return std::pow(1.0 + v1 * v1 + v2 * v2, 0.5 * exponent);
    case WeightKind::r_v2_power:
      return std::pow(1.0 + v2 * v2, 0.5 * exponent);
  }
  return 1.0;
}

ExponentSet::ExponentSet(double a_, double eps_, double delta_)
    : a(a_), eps(eps_), delta(delta_) {
  if (!(a > 8.0))
    throw hypothesis_violation("a > 8 required, got a=" + std::to_string(a));
  if (!(eps > 0.0))
    throw hypothesis_violation("eps > 0 required, got eps=" + std::to_string(eps));
  b = a - 4.0;
  alpha = a + 2.0 + eps;
  beta = b + 2.0 + eps;
  if (!(delta > alpha))
    throw hypothesis_violation("delta > a+2+eps = " + std::to_string(alpha) +
                               " required, got delta=" + std::to_string(delta));
}

}  // namespace vmfp
