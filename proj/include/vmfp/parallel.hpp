#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace vmfp {

/* Worker count for the slice-parallel loops.  Results never depend on it:
 * every parallel_for writes disjoint outputs and all reductions combine
 * per-slice partials serially in slice order. */
void set_threads(int n);
int threads();

// Runs fn(i) for i in [0, n).  Static block partition over the active
// worker count; fn must only write state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Fixed-order serial sum; the one reduction primitive, so identical inputs
// give bit-identical results regardless of threading.
double ordered_sum(std::span<const double> xs);

}  // namespace vmfp
