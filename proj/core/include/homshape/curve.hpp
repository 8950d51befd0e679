#pragma once

// Piecewise-geodesic model of a sampled curve. Segment i is the curve
// t -> exp(((t - t_i)/dt_i) A_i) c_i with A_i = alpha(c_i, v_i) and
// exp(A_i) c_i = c_{i+1}.

#include <optional>
#include <vector>

#include "homshape/paths.hpp"

namespace homshape {

/// Consecutive samples closer than this (in the natural point distance) are
/// treated as coincident.
inline constexpr double kCoincidentTolerance = 1e-12;

/// Newton settings for segment fits that have no closed form.
struct FitOptions {
  double tolerance = 1e-12;
  int max_iterations = 50;
};

/// The tangent v at `a` whose transported geodesic reaches `b` in unit time.
/// Sphere (and p = 1 Stiefel) use the closed arccos form, Grassmann the SVD
/// logarithm, lie_group the matrix logarithm, Stiefel a damped Newton solve.
/// `segment` is only used to label errors.
TangentVector segment_velocity(const ManifoldPoint& a, const ManifoldPoint& b, std::size_t segment = 0,
                               const FitOptions& options = {});

/// v_i for every segment of `c`.
std::vector<TangentVector> fit_velocities(const DiscreteCurve& c, const FitOptions& options = {});

/// A_i = alpha(c_i, v_i) for every segment.
std::vector<SkewMatrix> segment_increments(const DiscreteCurve& c, const FitOptions& options = {});

/// The transported derivative xi_i = A_i / dt_i as a path that
/// rho_evolution(c(t_0), .) maps back onto `c`.
AlgebraPath velocity_path(const DiscreteCurve& c, InnerMode inner = InnerMode::killing_scaled,
                          const FitOptions& options = {});

/// Caches the segment increments so that repeated evaluation is cheap.
class CurveInterpolant {
 public:
  explicit CurveInterpolant(DiscreteCurve c, const FitOptions& options = {});

  /// Returns samples_i exactly at t = t_i. Throws Errc::domain outside
  /// [t_0, t_N].
  ManifoldPoint operator()(double t) const;

  const DiscreteCurve& curve() const noexcept { return curve_; }
  const std::vector<SkewMatrix>& increments() const noexcept { return increments_; }

 private:
  DiscreteCurve curve_;
  std::vector<SkewMatrix> increments_;
};

/// One-off evaluation; fits only the segment containing t.
ManifoldPoint evaluate(const DiscreteCurve& c, double t);

struct FrameLift {
  std::vector<RotationMatrix> frames;
};

/// frames_0 = g0 (default: lift_to_group(c_0)), frames_{i+1} = exp(A_i) frames_i.
/// An explicit g0 must map the origin onto c_0 (Errc::base_mismatch).
FrameLift lift_frames(const DiscreteCurve& c, const std::optional<RotationMatrix>& g0 = std::nullopt,
                      const FitOptions& options = {});

/// samples'_i = c(s_i) on the warp's grid.
DiscreteCurve reparametrise_curve(const DiscreteCurve& c, const ReparamMap& s);

/// Geodesic resampling onto `segments` equal steps of [t_0, t_N].
DiscreteCurve resample(const DiscreteCurve& c, Index segments);

}  // namespace homshape
