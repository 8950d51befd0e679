#pragma once

#include <vector>

#include "homshape/paths.hpp"

namespace homshape {

/// Product-of-exponentials evolution of a piecewise-constant path:
/// G_0 = I, G_{i+1} = exp(dt_i q_i) G_i. Returns the N + 1 nodal values.
std::vector<RotationMatrix> evolve_group(const AlgebraPath& q);

/// rho_{c0}: c(t_0) = c0, c(t_{i+1}) = exp(dt_i q_i) c(t_i). A path with no
/// values yields the single-point curve at c0.
DiscreteCurve rho_evolution(const ManifoldPoint& c0, const AlgebraPath& q);

}  // namespace homshape
