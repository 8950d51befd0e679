#pragma once

// The supported homogeneous manifolds G/H with G = SO(n): their points,
// tangent vectors, the left action, and the transport map alpha that lifts
// tangent vectors into so(n).

#include <string_view>

#include "homshape/lie.hpp"

namespace homshape {

enum class ManifoldKind { sphere, stiefel, grassmann, lie_group };

ManifoldKind parse_manifold_kind(std::string_view name);
std::string_view to_string(ManifoldKind kind) noexcept;

inline constexpr double kManifoldTolerance = 1e-10;
inline constexpr double kTangentTolerance = 1e-8;

/// sphere: S^2 = SO(3)/SO(2), points are unit 3-vectors.
/// stiefel: SO(n)/SO(n-p), points are n x p matrices with orthonormal columns.
/// grassmann: SO(n)/(SO(p) x SO(n-p)), points are orthonormal n x p
///   representatives of p-dimensional subspaces.
/// lie_group: SO(n) = SO(n)/{e}, points are rotations.
struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::sphere;
  Index n = 3;
  Index p = 1;

  static ManifoldSpec sphere() { return {ManifoldKind::sphere, 3, 1}; }
  static ManifoldSpec stiefel(Index n, Index p) { return {ManifoldKind::stiefel, n, p}; }
  static ManifoldSpec grassmann(Index n, Index p) { return {ManifoldKind::grassmann, n, p}; }
  static ManifoldSpec lie_group(Index n) { return {ManifoldKind::lie_group, n, n}; }

  /// Throws Errc::configuration on an unsupported (kind, n, p) combination.
  void validate() const;
  /// Columns of a point's coordinate matrix.
  Index cols() const noexcept { return kind == ManifoldKind::lie_group ? n : p; }
  Index group_dim() const noexcept { return n; }

  friend bool operator==(const ManifoldSpec& a, const ManifoldSpec& b) {
    return a.kind == b.kind && a.n == b.n && a.cols() == b.cols();
  }
};

/// Deviation of `coords` from the manifold's defining constraints.
double constraint_defect(const ManifoldSpec& spec, const Matrix& coords);
/// Nearest point on the manifold (normalisation / polar factor).
Matrix project_to_manifold(const ManifoldSpec& spec, const Matrix& coords);

class ManifoldPoint {
 public:
  ManifoldPoint() = default;
  /// Throws Errc::dimension on a shape mismatch, Errc::not_on_manifold if the
  /// constraint defect exceeds `tol`.
  ManifoldPoint(const ManifoldSpec& spec, Matrix coords, double tol = kManifoldTolerance);

  static ManifoldPoint unchecked(const ManifoldSpec& spec, Matrix coords);

  const ManifoldSpec& spec() const noexcept { return spec_; }
  const Matrix& coords() const noexcept { return coords_; }
  double constraint_defect() const { return homshape::constraint_defect(spec_, coords_); }

 private:
  ManifoldSpec spec_;
  Matrix coords_;
};

/// The base point I_p (first p columns of the identity; identity for lie_group).
ManifoldPoint origin(const ManifoldSpec& spec);

/// Natural distance between two points: Frobenius distance of coordinates,
/// or of the orthogonal projectors QQ^T for grassmann.
double point_distance(const ManifoldPoint& a, const ManifoldPoint& b);

double tangent_defect(const ManifoldPoint& base, const Matrix& vec);
/// Removes the normal component: sphere/stiefel V - Q sym(Q^T V),
/// grassmann V - Q Q^T V, lie_group skew(V B^T) B.
Matrix project_to_tangent(const ManifoldPoint& base, const Matrix& vec);

class TangentVector {
 public:
  TangentVector() = default;
  /// Checks tangency to `kTangentTolerance` (Errc::invalid_tangent), or
  /// projects onto the tangent space first when `repair` is set.
  TangentVector(ManifoldPoint base, Matrix vec, bool repair = false);

  static TangentVector unchecked(ManifoldPoint base, Matrix vec);

  const ManifoldPoint& base() const noexcept { return base_; }
  const Matrix& vec() const noexcept { return vec_; }

 private:
  ManifoldPoint base_;
  Matrix vec_;
};

/// Lambda(g, x) = g x.
ManifoldPoint act(const RotationMatrix& g, const ManifoldPoint& x);
/// Pushforward of the action on tangent vectors.
TangentVector act(const RotationMatrix& g, const TangentVector& v);

/// The 1-form lifting v in T_x M to so(n); the result xi satisfies
/// xi * x = v.
///   sphere      v u^T - u v^T
///   stiefel     f Q^T - Q f^T,   f = V - Q (Q^T V)/2
///   grassmann   V Q^T - Q V^T
///   lie_group   V g^{-1}
SkewMatrix alpha(const ManifoldPoint& x, const TangentVector& v);
SkewMatrix alpha(const TangentVector& v);

/// || alpha(g x, g v) - Ad(g) alpha(x, v) ||_F.
double alpha_equivariance_defect(const RotationMatrix& g, const ManifoldPoint& x,
                                 const TangentVector& v);

/// Isotropy / reductive-complement split of so(n) for this manifold. For
/// lie_group the isotropy algebra is trivial and m = so(n).
ReductiveSplit reductive_split(const ManifoldSpec& spec, const SkewMatrix& x);

/// A rotation whose first p columns are x (the [U, U_perp] completion),
/// computed by Householder QR with a sign fix so that det = +1. For
/// lie_group this is x itself.
RotationMatrix lift_to_group(const ManifoldPoint& x);

}  // namespace homshape
