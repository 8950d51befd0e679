#pragma once

// Optimal reparametrisation of one transformed curve against another by
// dynamic programming over strictly monotone lattice paths.

#include <limits>
#include <utility>
#include <vector>

#include "homshape/paths.hpp"

namespace homshape {

struct ReparamOptions {
  /// Largest index advance (i - k, j - l) of a single arc; 0 means N.
  Index window = 0;
  /// Drop the sqrt(slope) factor on the warped path (the cost written
  /// without the equivariance scaling).
  bool unscaled_cost = false;
};

using LatticeNode = std::pair<Index, Index>;
using LatticePath = std::vector<LatticeNode>;

/// Exact integral of |q1(t) - sqrt(sigma) q2(tau(t))|^2 over [t_k, t_i], with
/// tau the affine map [t_k, t_i] -> [t_l, t_j] of slope sigma. Both paths are
/// piecewise constant, so the integrand is piecewise constant between the
/// merged breakpoints and the sum is exact up to rounding (clamped at 0).
class ArcCostEvaluator {
 public:
  ArcCostEvaluator(const AlgebraPath& q1, const AlgebraPath& q2, bool unscaled_cost = false);

  /// Requires 0 <= k < i <= N and 0 <= l < j <= N (Errc::invalid_arc).
  double operator()(Index k, Index l, Index i, Index j) const;

  Index segments() const noexcept { return n_; }
  const Grid& grid() const noexcept { return grid_; }

 private:
  double cost_unchecked(Index k, Index l, Index i, Index j) const;

  Index n_ = 0;
  Grid grid_;
  Matrix gram_;  // <q1_a, q2_b>
  Vector norm1_;  // |q1_a|^2
  Vector norm2_;  // |q2_b|^2
  Vector mass1_;  // prefix integrals of |q1|^2
  Vector mass2_;  // prefix integrals of |q2|^2
  bool literal_ = false;
};

/// Arc cost from node (k, l) to node (i, j).
double local_cost(const AlgebraPath& q1, const AlgebraPath& q2, Index i, Index j, Index k, Index l,
                  bool unscaled_cost = false);

struct DPTable {
  static constexpr double unreachable = std::numeric_limits<double>::infinity();
  /// cost(i, j) = A_{i,j}.
  Matrix cost;
  /// Predecessor of each finite-cost node; (-1, -1) for the root and for
  /// unreachable nodes.
  std::vector<std::vector<LatticeNode>> pred;
};

struct ReparamResult {
  ReparamMap warp;
  double cost = 0.0;
  LatticePath path;  // (0, 0) ... (N, N)
  DPTable table;
};

/// Fills the table with strict arcs k < i, l < j inside the window,
/// choosing the lexicographically smallest (k, l) among equal costs, then
/// backtracks from (N, N). s_i interpolates the path linearly in t.
ReparamResult reparametrise(const AlgebraPath& q1, const AlgebraPath& q2, const ReparamOptions& options = {});

/// Warp s_i from a lattice path over `grid`.
ReparamMap warp_from_path(const Grid& grid, const LatticePath& path);

struct BruteForceResult {
  LatticePath path;
  double cost = 0.0;
};

inline constexpr Index kBruteForceMaxSegments = 6;

/// Exhaustive minimum over all strict lattice paths (0, 0) -> (N, N) with
/// the same arc costs. Throws Errc::too_large for N > 6.
BruteForceResult brute_force_reparam(const AlgebraPath& q1, const AlgebraPath& q2, bool unscaled_cost = false);

/// Sum of arc costs along `path`, accumulated in path order.
double path_cost(const ArcCostEvaluator& cost, const LatticePath& path);

}  // namespace homshape
