#pragma once

// Square root velocity transforms of sampled curves and their inverses.
// Norms inside the scaling maps use the path's inner product mode.

#include <optional>

#include "homshape/curve.hpp"

namespace homshape {

/// Values with norm at or below this are treated as zero by the scaling map.
inline constexpr double kZeroValueTolerance = 1e-12;

/// sc(q)_i = q_i / sqrt(|q_i|). Throws Errc::degenerate_velocity on a zero
/// value, naming the segment.
AlgebraPath scale(const AlgebraPath& q);
/// sc^{-1}(q)_i = q_i |q_i|.
AlgebraPath unscale(const AlgebraPath& q);

struct InverseOptions {
  /// Accept zero values (constant segments) instead of raising.
  bool allow_flat = false;
  /// Map a path with no values to the single-point curve instead of raising.
  bool allow_point = false;
};

/// q_i = sc(alpha(c_i, v_i) / dt_i).
AlgebraPath srvt(const DiscreteCurve& c, InnerMode inner = InnerMode::killing_scaled,
                 const FitOptions& options = {});

/// c_0 = base, c_{i+1} = exp(dt_i |q_i| q_i) c_i.
DiscreteCurve srvt_inverse(const AlgebraPath& q, const InverseOptions& options = {});

/// Psi(q)_i = -Ad(G_i^{-1}) q_i with G the evolution of q at the left end of
/// segment i.
AlgebraPath psi(const AlgebraPath& q);
/// Ad(g0) Psi(q). Its inverse is psi_g0(., g0^{-1}).
AlgebraPath psi_g0(const AlgebraPath& q, const RotationMatrix& g0);

/// The reductive transform: values sc(-m(F_i^T A_i F_i) / dt_i) in the
/// reductive complement, where F is the propagated frame lift. `g0`
/// defaults to lift_to_group(c_0); two curves that are compared should share
/// it. The frame is stored on the returned path.
AlgebraPath reductive_srvt(const DiscreteCurve& c, const std::optional<RotationMatrix>& g0 = std::nullopt,
                           InnerMode inner = InnerMode::killing_scaled, const FitOptions& options = {});

/// c = rho_{c0}(Psi_{g0}(sc^{-1}(q))) with c0 = q.base(). Throws
/// Errc::invalid_reductive_path if a value leaves the complement by more
/// than 1e-8, Errc::base_mismatch if g0 does not map the origin to c0.
DiscreteCurve reductive_srvt_inverse(const AlgebraPath& q, const RotationMatrix& g0,
                                     const InverseOptions& options = {});
/// Uses the frame stored on `q`, or lift_to_group(q.base()).
DiscreteCurve reductive_srvt_inverse(const AlgebraPath& q, const InverseOptions& options = {});

/// Dispatch on kind (srvt or reductive); `g0` is ignored for srvt.
AlgebraPath transform(const DiscreteCurve& c, TransformKind kind, InnerMode inner = InnerMode::killing_scaled,
                      const std::optional<RotationMatrix>& g0 = std::nullopt);
/// Inverse matching q.kind().
DiscreteCurve inverse_transform(const AlgebraPath& q, const InverseOptions& options = {});

}  // namespace homshape
