#pragma once

#include <cstddef>
#include <vector>

#include "vmfp/errors.hpp"

namespace vmfp {

/* Discretized phase space (x, v1, v2).
 *
 * x lives on a periodic interval [0, x_len) with nx cells; v on the square
 * box [-v_max, v_max]^2 with nv cells per axis.  All samples sit at cell
 * centers, so the velocity grid is symmetric about v = 0 and never contains
 * the origin itself.  nx and nv must be powers of two: the field solve
 * shifts characteristics by exactly one cell per step and the refinement
 * studies halve the spacings.
 */
struct PhaseGrid {
  int nx = 0;
  double x_len = 0.0;
  int nv = 0;
  double v_max = 0.0;
  double dx = 0.0;
  double dv = 0.0;

  PhaseGrid() = default;
  PhaseGrid(int nx_, double x_len_, int nv_, double v_max_);

  double x(int i) const { return (i + 0.5) * dx; }
  double v(int k) const { return -v_max + (k + 0.5) * dv; }

  std::size_t cells() const {
    return static_cast<std::size_t>(nx) * nv * nv;
  }
  // cell volume of the phase-space quadrature
  double vol() const { return dx * dv * dv; }

  bool operator==(const PhaseGrid& o) const {
    return nx == o.nx && x_len == o.x_len && nv == o.nv && v_max == o.v_max;
  }
};

/* Particle density f sampled on a PhaseGrid, flat layout [ix][iv1][iv2]
 * with iv2 contiguous. */
struct DistField {
  PhaseGrid grid;
  std::vector<double> values;

  DistField() = default;
  explicit DistField(const PhaseGrid& g) : grid(g), values(g.cells(), 0.0) {}

  double& at(int ix, int i1, int i2) {
    return values[(static_cast<std::size_t>(ix) * grid.nv + i1) * grid.nv + i2];
  }
  double at(int ix, int i1, int i2) const {
    return values[(static_cast<std::size_t>(ix) * grid.nv + i1) * grid.nv + i2];
  }
};

// Values on the x-grid (densities, currents, field components).
using ScalarField1D = std::vector<double>;

/* Weight families used by the diagnostics: v0^gamma with
 * v0 = sqrt(1 + |v|^2), and R(v2)^p with R(s) = sqrt(1 + s^2). */
enum class WeightKind { v0_power, r_v2_power };

struct WeightSpec {
  WeightKind kind = WeightKind::v0_power;
  double exponent = 0.0;

  double operator()(double v1, double v2) const;
};

/* The exponent bookkeeping of the local-existence construction:
 * a > 8, b = a - 4, alpha = a + 2 + eps, beta = b + 2 + eps, and the
 * sup-norm decay exponent delta > alpha.  Throws hypothesis_violation
 * when a requested set breaks one of the inequalities.
 */
struct ExponentSet {
  double a = 9.0;
  double eps = 0.5;
  double delta = 12.0;
  double b = 5.0;
  double alpha = 11.5;
  double beta = 7.5;

  ExponentSet() = default;
  ExponentSet(double a_, double eps_, double delta_);
};

}  // namespace vmfp
