#include "homshape/manifold.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace homshape {

ManifoldKind parse_manifold_kind(std::string_view name) {
  if (name == "sphere") return ManifoldKind::sphere;
  if (name == "stiefel") return ManifoldKind::stiefel;
  if (name == "grassmann") return ManifoldKind::grassmann;
  if (name == "lie_group") return ManifoldKind::lie_group;
  throw Error(Errc::configuration, "unknown manifold kind '" + std::string(name) + "'");
}

std::string_view to_string(ManifoldKind kind) noexcept {
  switch (kind) {
    case ManifoldKind::sphere: return "sphere";
    case ManifoldKind::stiefel: return "stiefel";
    case ManifoldKind::grassmann: return "grassmann";
    case ManifoldKind::lie_group: return "lie_group";
  }
  return "unknown";
}

void ManifoldSpec::validate() const {
  switch (kind) {
    case ManifoldKind::sphere:
      if (n != 3 || p != 1) throw Error(Errc::configuration, "sphere requires n=3, p=1");
      return;
    case ManifoldKind::stiefel:
    case ManifoldKind::grassmann:
      if (p < 1 || p >= n) {
        throw Error(Errc::configuration, std::string(to_string(kind)) + " requires 1 <= p < n, got n=" +
                                             std::to_string(n) + ", p=" + std::to_string(p));
      }
      return;
    case ManifoldKind::lie_group:
      if (n < 2) throw Error(Errc::configuration, "lie_group requires n >= 2");
      return;
  }
}

namespace {

void check_shape(const ManifoldSpec& spec, const Matrix& m, const char* what) {
  if (m.rows() != spec.n || m.cols() != spec.cols()) {
    throw Error(Errc::dimension, std::string(what) + ": expected " + std::to_string(spec.n) + "x" +
                                     std::to_string(spec.cols()) + ", got " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

Matrix polar_factor(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().transpose();
}

}  // namespace

double constraint_defect(const ManifoldSpec& spec, const Matrix& coords) {
  check_shape(spec, coords, "manifold point");
  const Index k = spec.cols();
  const double orth = (coords.transpose() * coords - Matrix::Identity(k, k)).norm();
  if (spec.kind == ManifoldKind::lie_group) {
    return std::max(orth, std::abs(coords.determinant() - 1.0));
  }
  return orth;
}

Matrix project_to_manifold(const ManifoldSpec& spec, const Matrix& coords) {
  check_shape(spec, coords, "manifold point");
  if (spec.kind == ManifoldKind::sphere) return coords / coords.norm();
  Matrix q = polar_factor(coords);
  if (spec.kind == ManifoldKind::lie_group && q.determinant() < 0.0) {
    Eigen::JacobiSVD<Matrix> svd(coords, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix u = svd.matrixU();
    u.col(u.cols() - 1) *= -1.0;
    q = u * svd.matrixV().transpose();
  }
  return q;
}

ManifoldPoint::ManifoldPoint(const ManifoldSpec& spec, Matrix coords, double tol)
    : spec_(spec), coords_(std::move(coords)) {
  spec_.validate();
  const double defect = homshape::constraint_defect(spec_, coords_);
  if (!(defect <= tol)) {
    throw Error(Errc::not_on_manifold, std::string("point is not on the ") +
                                           std::string(to_string(spec_.kind)) + " manifold (defect " +
                                           std::to_string(defect) + ")");
  }
}

ManifoldPoint ManifoldPoint::unchecked(const ManifoldSpec& spec, Matrix coords) {
  ManifoldPoint x;
  x.spec_ = spec;
  x.coords_ = std::move(coords);
  return x;
}

ManifoldPoint origin(const ManifoldSpec& spec) {
  spec.validate();
  return ManifoldPoint::unchecked(spec, Matrix::Identity(spec.n, spec.cols()));
}

double point_distance(const ManifoldPoint& a, const ManifoldPoint& b) {
  if (!(a.spec() == b.spec())) throw Error(Errc::dimension, "point_distance: manifold mismatch");
  if (a.spec().kind == ManifoldKind::grassmann) {
    const Matrix pa = a.coords() * a.coords().transpose();
    const Matrix pb = b.coords() * b.coords().transpose();
    return (pa - pb).norm();
  }
  return (a.coords() - b.coords()).norm();
}

double tangent_defect(const ManifoldPoint& base, const Matrix& vec) {
  const ManifoldSpec& spec = base.spec();
  check_shape(spec, vec, "tangent vector");
  const Matrix& q = base.coords();
  switch (spec.kind) {
    case ManifoldKind::sphere:
    case ManifoldKind::stiefel: {
      const Matrix s = q.transpose() * vec;
      return (0.5 * (s + s.transpose())).norm();
    }
    case ManifoldKind::grassmann:
      return (q.transpose() * vec).norm();
    case ManifoldKind::lie_group: {
      const Matrix s = vec * q.transpose();
      return (0.5 * (s + s.transpose())).norm();
    }
  }
  return 0.0;
}

Matrix project_to_tangent(const ManifoldPoint& base, const Matrix& vec) {
  const ManifoldSpec& spec = base.spec();
  check_shape(spec, vec, "tangent vector");
  const Matrix& q = base.coords();
  switch (spec.kind) {
    case ManifoldKind::sphere:
    case ManifoldKind::stiefel: {
      const Matrix s = q.transpose() * vec;
      return vec - q * (0.5 * (s + s.transpose()));
    }
    case ManifoldKind::grassmann:
      return vec - q * (q.transpose() * vec);
    case ManifoldKind::lie_group:
      return SkewMatrix::skew_part(vec * q.transpose()).matrix() * q;
  }
  return vec;
}

TangentVector::TangentVector(ManifoldPoint base, Matrix vec, bool repair)
    : base_(std::move(base)), vec_(std::move(vec)) {
  if (repair) {
    vec_ = project_to_tangent(base_, vec_);
    return;
  }
  const double defect = tangent_defect(base_, vec_);
  if (!(defect <= kTangentTolerance)) {
    throw Error(Errc::invalid_tangent,
                "vector is not tangent at its base point (defect " + std::to_string(defect) + ")");
  }
}

TangentVector TangentVector::unchecked(ManifoldPoint base, Matrix vec) {
  TangentVector v;
  v.base_ = std::move(base);
  v.vec_ = std::move(vec);
  return v;
}

ManifoldPoint act(const RotationMatrix& g, const ManifoldPoint& x) {
  if (g.dim() != x.spec().n) throw Error(Errc::dimension, "act: group/manifold dimension mismatch");
  return ManifoldPoint::unchecked(x.spec(), g.matrix() * x.coords());
}

TangentVector act(const RotationMatrix& g, const TangentVector& v) {
  return TangentVector::unchecked(act(g, v.base()), g.matrix() * v.vec());
}

SkewMatrix alpha(const ManifoldPoint& x, const TangentVector& v) {
  const ManifoldSpec& spec = x.spec();
  if (!(spec == v.base().spec())) throw Error(Errc::dimension, "alpha: manifold mismatch");
  check_shape(spec, v.vec(), "tangent vector");
  const double defect = tangent_defect(x, v.vec());
  if (!(defect <= kTangentTolerance)) {
    throw Error(Errc::invalid_tangent,
                "alpha: vector is not tangent at x (defect " + std::to_string(defect) + ")");
  }
  const Matrix& q = x.coords();
  const Matrix& w = v.vec();
  switch (spec.kind) {
    case ManifoldKind::sphere:
    case ManifoldKind::grassmann:
      return SkewMatrix::skew_part(2.0 * (w * q.transpose()));
    case ManifoldKind::stiefel: {
      const Matrix f = w - 0.5 * q * (q.transpose() * w);
      return SkewMatrix::skew_part(2.0 * (f * q.transpose()));
    }
    case ManifoldKind::lie_group:
      return SkewMatrix::skew_part(w * q.transpose());
  }
  return SkewMatrix::zero(spec.n);
}

SkewMatrix alpha(const TangentVector& v) { return alpha(v.base(), v); }

double alpha_equivariance_defect(const RotationMatrix& g, const ManifoldPoint& x,
                                 const TangentVector& v) {
  const TangentVector gv = act(g, TangentVector::unchecked(x, v.vec()));
  const SkewMatrix lhs = alpha(gv.base(), gv);
  const SkewMatrix rhs = adjoint(g, alpha(x, v));
  return (lhs - rhs).matrix().norm();
}

ReductiveSplit reductive_split(const ManifoldSpec& spec, const SkewMatrix& x) {
  switch (spec.kind) {
    case ManifoldKind::sphere:
    case ManifoldKind::stiefel:
      return reductive_project(x, spec.p, ReductiveMode::stiefel);
    case ManifoldKind::grassmann:
      return reductive_project(x, spec.p, ReductiveMode::grassmann);
    case ManifoldKind::lie_group:
      return ReductiveSplit{0, SkewMatrix::zero(x.dim()), x};
  }
  return {};
}

RotationMatrix lift_to_group(const ManifoldPoint& x) {
  const ManifoldSpec& spec = x.spec();
  if (spec.kind == ManifoldKind::lie_group) return RotationMatrix::unchecked(x.coords());

  const Index n = spec.n;
  const Index p = spec.p;
  Eigen::HouseholderQR<Matrix> qr(x.coords());
  Matrix frame = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
  for (Index j = 0; j < p; ++j) {
    if (r(j, j) < 0.0) frame.col(j) *= -1.0;
  }
  frame.leftCols(p) = x.coords();
  if (frame.determinant() < 0.0) frame.col(n - 1) *= -1.0;
  return RotationMatrix::unchecked(std::move(frame));
}

}  // namespace homshape
