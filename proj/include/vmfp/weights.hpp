#pragma once

#include <functional>

#include "vmfp/grid.hpp"

namespace vmfp {

// (1 + |v|^2)^(gamma/2)
double weight_v0(double v1, double v2, double gamma);

/* Weighted L2 norm ( sum w(v)^2 f^2 dv dx )^(1/2) by the grid's midpoint
 * quadrature.  Every norm and moment in the project uses this same rule so
 * that discrete identities close exactly. */
double weighted_l2_norm(const DistField& f, const WeightSpec& w);

/* The iteration norm of the construction:
 * ||v0^(a/2) f||_2 + ||v0^(b/2) dx f||_2 with a centered periodic
 * x-derivative. */
double f_norm(const DistField& f, const ExponentSet& exps);

// Norm of a difference without materializing it; used by the stability and
// iteration diagnostics.
double f_norm_diff(const DistField& f, const DistField& g, const ExponentSet& exps);

// Per-x-cell velocity moment: out[ix] = sum kernel(v1,v2) f dv^2.
ScalarField1D moment_density(const DistField& f,
                             const std::function<double(double, double)>& kernel);

// max over grid nodes of w(v) |f|
double sup_norm_weighted(const DistField& f, const WeightSpec& w);

}  // namespace vmfp
