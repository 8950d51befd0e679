#pragma once

// Sampled curves on a manifold, piecewise-constant so(n)-valued paths, and
// monotone grid warps. All three share the same notion of a time grid.

#include <optional>
#include <string_view>
#include <vector>

#include "homshape/manifold.hpp"

namespace homshape {

using Grid = std::vector<double>;

/// N + 1 equispaced nodes on [t0, t1].
Grid uniform_grid(Index segments, double t0 = 0.0, double t1 = 1.0);

/// Throws Errc::domain unless the grid is finite and strictly increasing
/// with at least `min_nodes` nodes.
void validate_grid(const Grid& grid, std::size_t min_nodes = 2);

/// Largest |a_i - b_i|; +inf on a size mismatch.
double grid_distance(const Grid& a, const Grid& b);

class DiscreteCurve {
 public:
  DiscreteCurve() = default;
  /// Requires grid.size() == samples.size() >= 2 and every sample to carry
  /// `spec`. Segment distinctness is checked where velocities are fitted.
  DiscreteCurve(ManifoldSpec spec, Grid grid, std::vector<ManifoldPoint> samples);

  /// The degenerate single-sample curve; only produced on request.
  static DiscreteCurve point(ManifoldPoint sample, double t0 = 0.0);

  const ManifoldSpec& spec() const noexcept { return spec_; }
  const Grid& grid() const noexcept { return grid_; }
  const std::vector<ManifoldPoint>& samples() const noexcept { return samples_; }

  std::size_t size() const noexcept { return samples_.size(); }
  std::size_t segments() const noexcept { return samples_.empty() ? 0 : samples_.size() - 1; }
  bool is_point() const noexcept { return samples_.size() == 1; }

  const ManifoldPoint& sample(std::size_t i) const { return samples_.at(i); }
  double t(std::size_t i) const { return grid_.at(i); }
  double dt(std::size_t i) const { return grid_.at(i + 1) - grid_.at(i); }
  double front_time() const { return grid_.front(); }
  double back_time() const { return grid_.back(); }

  double max_constraint_defect() const;

 private:
  ManifoldSpec spec_;
  Grid grid_;
  std::vector<ManifoldPoint> samples_;
};

/// Largest point_distance between corresponding samples; +inf if the
/// curves have different lengths or specs.
double max_sample_deviation(const DiscreteCurve& a, const DiscreteCurve& b);

/// Which transform produced an AlgebraPath. `velocity` is the unscaled
/// transported derivative that rho_evolution consumes.
enum class TransformKind { velocity, srvt, reductive };

TransformKind parse_transform_kind(std::string_view name);
std::string_view to_string(TransformKind kind) noexcept;

class AlgebraPath {
 public:
  AlgebraPath() = default;
  /// values.size() must be grid.size() - 1 and every value n x n.
  AlgebraPath(ManifoldSpec spec, Grid grid, std::vector<SkewMatrix> values, ManifoldPoint base,
              InnerMode inner = InnerMode::killing_scaled,
              TransformKind kind = TransformKind::velocity);

  const ManifoldSpec& spec() const noexcept { return spec_; }
  const Grid& grid() const noexcept { return grid_; }
  const std::vector<SkewMatrix>& values() const noexcept { return values_; }
  const ManifoldPoint& base() const noexcept { return base_; }
  InnerMode inner() const noexcept { return inner_; }
  TransformKind kind() const noexcept { return kind_; }

  /// Frame g0 used by the reductive transform; empty for other kinds.
  const std::optional<RotationMatrix>& frame() const noexcept { return frame_; }
  void set_frame(std::optional<RotationMatrix> g0) { frame_ = std::move(g0); }

  std::size_t size() const noexcept { return values_.size(); }
  const SkewMatrix& value(std::size_t i) const { return values_.at(i); }
  double dt(std::size_t i) const { return grid_.at(i + 1) - grid_.at(i); }

  /// Same grid, base, inner product and frame; new values and kind.
  AlgebraPath with_values(std::vector<SkewMatrix> values, TransformKind kind) const;
  AlgebraPath with_values(std::vector<SkewMatrix> values) const {
    return with_values(std::move(values), kind_);
  }

 private:
  ManifoldSpec spec_;
  Grid grid_;
  std::vector<SkewMatrix> values_;
  ManifoldPoint base_;
  InnerMode inner_ = InnerMode::killing_scaled;
  TransformKind kind_ = TransformKind::velocity;
  std::optional<RotationMatrix> frame_;
};

/// max_i ||a_i - b_i||_F over values; +inf on a size mismatch.
double max_value_deviation(const AlgebraPath& a, const AlgebraPath& b);

/// A monotone warp sampled on a grid: s_i = phi(t_i), s_0 = t_0, s_N = t_N.
class ReparamMap {
 public:
  ReparamMap() = default;
  /// Throws Errc::invalid_warp on moved endpoints (beyond 1e-12 relative to
  /// the grid span) or a decreasing step. Endpoints are snapped exactly.
  ReparamMap(Grid grid, std::vector<double> s);

  static ReparamMap identity(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return s_; }
  std::size_t size() const noexcept { return s_.size(); }
  double operator[](std::size_t i) const { return s_[i]; }

  bool strictly_increasing() const;

  /// Piecewise-linear evaluation on [t_0, t_N].
  double operator()(double t) const;
  /// Piecewise-linear inverse sampled on the same grid. Requires a strictly
  /// increasing warp.
  ReparamMap inverse() const;

 private:
  Grid grid_;
  std::vector<double> s_;
};

}  // namespace homshape
