#pragma once

#include <span>
#include <vector>

namespace vmfp {

/* Conservative semi-Lagrangian line transport.
 *
 * All 1-D moves of the solver (x-advection per velocity node, the
 * velocity shifts and shears of the Lorentz step, the radial stretch of
 * the friction model) go through these routines.  They work on cell
 * averages in flux form with a monotonized piecewise-parabolic
 * reconstruction (cubic edge interpolation + Colella-Woodward limiter),
 * which gives
 *   - exact mass conservation (fluxes telescope),
 *   - no new extrema (updated value is a mean of the limited
 *     reconstruction over the departure interval),
 *   - positivity.
 * Shift amounts are in cell units; an exact-integer shift degenerates to
 * a bit-exact index move.
 */

// Limited parabola on one cell, local coordinate in [0,1].
struct Parabola {
  double pl = 0.0, pr = 0.0, mean = 0.0;
  // integral of the parabola over [0, theta]
  double integral(double theta) const {
    const double d = pr - pl;
    const double p6 = 6.0 * mean - 3.0 * (pl + pr);
    return pl * theta + 0.5 * (d + p6) * theta * theta -
           p6 * theta * theta * theta / 3.0;
  }
};

// Reconstruction of a full line; ghost cells are periodic images or zeros.
void ppm_reconstruct(std::span<const double> f, bool periodic,
                     std::vector<Parabola>& out);

/* Shift a periodic line right by `shift` cells.  If `edge_flux` is given it
 * receives (accumulates) the mass crossing edge i+1/2 rightward, in
 * cell-average * cell units, integer part included. */
void shift_periodic(std::span<const double> in, std::span<double> out,
                    double shift, double* edge_flux = nullptr);

/* Shift a line right by `shift` cells with zero inflow; mass pushed past
 * either end is dropped and returned. */
double shift_zeropad(std::span<const double> in, std::span<double> out,
                     double shift);

/* General monotone remap with zero inflow: target cell i receives the
 * reconstruction integrated over source interval [edges[i], edges[i+1]]
 * (source cell coordinates, strictly increasing).  Returns the mass that
 * mapped outside the target range. */
double remap_zeropad(std::span<const double> in, std::span<double> out,
                     std::span<const double> edges);

}  // namespace vmfp
