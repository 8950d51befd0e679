#pragma once

// Distances between transformed curves, the elastic shape distance,
// straight-line interpolation in transform space, and the pullback metric.

#include <optional>
#include <vector>

#include "homshape/reparam.hpp"
#include "homshape/srvt.hpp"

namespace homshape {

/// sqrt(sum_i dt_i |q1_i - q2_i|^2) with q1's inner product.
double l2_distance(const AlgebraPath& q1, const AlgebraPath& q2);

struct ShapeDistanceOptions {
  TransformKind transform = TransformKind::srvt;
  InnerMode inner = InnerMode::killing_scaled;
  /// Common uniform resampling size; 0 keeps the curves' own grids, which
  /// must then coincide.
  Index resample = 100;
  ReparamOptions reparam;
  /// Rotate c2 so that it starts at c1(t_0) instead of raising
  /// Errc::base_mismatch.
  bool align_start = false;
};

struct ShapeDistanceReport {
  double d_param = 0.0;
  double d_shape = 0.0;
  ReparamMap warp;
  TransformKind transform = TransformKind::srvt;
  /// A_{N,N} of the dynamic programme.
  double dp_cost = 0.0;
  /// True when the optimal lattice warp did not beat the identity after
  /// re-transforming, so the identity was reported.
  bool identity_fallback = false;
  /// c2 after resampling, alignment and warping.
  DiscreteCurve aligned;
};

/// A rotation g with g c2(t_0) = c1(t_0): the minimal rotation in the plane
/// of the two points for the sphere, F1 F2^T for frame lifts otherwise.
RotationMatrix start_alignment(const ManifoldPoint& target, const ManifoldPoint& source);

/// The rotated curve g c.
DiscreteCurve act(const RotationMatrix& g, const DiscreteCurve& c);

ShapeDistanceReport shape_distance(const DiscreteCurve& c1, const DiscreteCurve& c2,
                                   const ShapeDistanceOptions& options = {});

/// R^{-1}((1 - theta) R(c1) + theta R(c2)). Both curves must share grid and
/// base point (Errc::base_mismatch).
DiscreteCurve geodesic_interpolate(const DiscreteCurve& c1, const DiscreteCurve& c2, double theta,
                                   TransformKind kind = TransformKind::srvt,
                                   InnerMode inner = InnerMode::killing_scaled);

/// The transform-space straight line itself, before inversion. Throws
/// Errc::degenerate_intermediate if a value vanishes.
AlgebraPath interpolate_paths(const AlgebraPath& q1, const AlgebraPath& q2, double theta);

/// A tangent vector per sample of a curve.
using TangentField = std::vector<Matrix>;

/// Moves each sample along exp(eps alpha(x_i, v_i)) x_i.
DiscreteCurve perturb(const DiscreteCurve& c, const TangentField& v, double eps);

inline constexpr double kMetricStep = 1e-5;

/// <dR(c)v, dR(c)w>_{L^2} with both derivatives taken by central differences
/// of step `eps` along perturb().
double pullback_metric(const DiscreteCurve& c, const TangentField& v, const TangentField& w,
                       TransformKind kind = TransformKind::srvt, InnerMode inner = InnerMode::killing_scaled,
                       double eps = kMetricStep);

/// Closed form on the sphere: with ds = |xi| dt, u = xi/|xi| and D_s v the
/// arclength derivative of the transported variation,
///   sum_i (1/4 <D_s v, u><D_s w, u> + <D_s v - u<D_s v,u>, D_s w - u<D_s w,u>>) ds,
/// where the variation of xi_i is differentiated analytically.
double pullback_metric_sphere(const DiscreteCurve& c, const TangentField& v, const TangentField& w);

}  // namespace homshape
