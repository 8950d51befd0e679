#include "homshape/lie.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace homshape {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension: return "dimension";
    case Errc::not_skew: return "not_skew";
    case Errc::not_rotation: return "not_rotation";
    case Errc::not_on_manifold: return "not_on_manifold";
    case Errc::invalid_tangent: return "invalid_tangent";
    case Errc::degenerate_segment: return "degenerate_segment";
    case Errc::degenerate_velocity: return "degenerate_velocity";
    case Errc::degenerate_intermediate: return "degenerate_intermediate";
    case Errc::lift_failure: return "lift_failure";
    case Errc::invalid_warp: return "invalid_warp";
    case Errc::invalid_arc: return "invalid_arc";
    case Errc::invalid_reductive_path: return "invalid_reductive_path";
    case Errc::grid_mismatch: return "grid_mismatch";
    case Errc::base_mismatch: return "base_mismatch";
    case Errc::domain: return "domain";
    case Errc::configuration: return "configuration";
    case Errc::too_large: return "too_large";
    case Errc::schema: return "schema";
  }
  return "unknown";
}

bool is_numerical(Errc code) noexcept {
  switch (code) {
    case Errc::degenerate_segment:
    case Errc::degenerate_velocity:
    case Errc::degenerate_intermediate:
    case Errc::lift_failure:
      return true;
    default:
      return false;
  }
}

InnerMode parse_inner_mode(std::string_view name) {
  if (name == "killing" || name == "killing_scaled") return InnerMode::killing_scaled;
  if (name == "frobenius") return InnerMode::frobenius;
  throw Error(Errc::configuration, "unknown inner product mode '" + std::string(name) + "'");
}

std::string_view to_string(InnerMode mode) noexcept {
  return mode == InnerMode::frobenius ? "frobenius" : "killing";
}

// ---------------------------------------------------------------------------
// SkewMatrix

SkewMatrix::SkewMatrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::dimension, "skew matrix must be square, got " + std::to_string(m.rows()) +
                                     "x" + std::to_string(m.cols()));
  }
  const double sym = (0.5 * (m + m.transpose())).norm();
  if (sym > kSkewTolerance) {
    throw Error(Errc::not_skew, "matrix is not skew-symmetric (symmetric part " +
                                    std::to_string(sym) + ")");
  }
  m_ = 0.5 * (m - m.transpose());
}

SkewMatrix SkewMatrix::zero(Index n) { return SkewMatrix(Matrix::Zero(n, n), Trusted{}); }

SkewMatrix SkewMatrix::skew_part(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::dimension, "skew_part of a non-square matrix");
  return SkewMatrix(0.5 * (m - m.transpose()), Trusted{});
}

SkewMatrix& SkewMatrix::operator+=(const SkewMatrix& other) {
  if (other.dim() != dim()) throw Error(Errc::dimension, "so(n) dimension mismatch in sum");
  m_ += other.m_;
  return *this;
}

SkewMatrix& SkewMatrix::operator-=(const SkewMatrix& other) {
  if (other.dim() != dim()) throw Error(Errc::dimension, "so(n) dimension mismatch in difference");
  m_ -= other.m_;
  return *this;
}

SkewMatrix& SkewMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// RotationMatrix

RotationMatrix::RotationMatrix(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error(Errc::dimension, "rotation matrix must be square");
  const Index n = m.rows();
  const double orth = (m.transpose() * m - Matrix::Identity(n, n)).norm();
  if (orth > tol) {
    throw Error(Errc::not_rotation, "matrix is not orthogonal (defect " + std::to_string(orth) + ")");
  }
  const double det = m.determinant();
  if (std::abs(det - 1.0) > tol) {
    throw Error(Errc::not_rotation, "rotation must have det +1, got " + std::to_string(det));
  }
  m_ = m;
}

RotationMatrix RotationMatrix::identity(Index n) { return unchecked(Matrix::Identity(n, n)); }

RotationMatrix RotationMatrix::unchecked(Matrix m) {
  RotationMatrix r;
  r.m_ = std::move(m);
  return r;
}

double RotationMatrix::orthogonality_defect() const {
  return (m_.transpose() * m_ - Matrix::Identity(dim(), dim())).norm();
}

// ---------------------------------------------------------------------------
// so(3) isomorphism and exponentials

SkewMatrix hat(const Vector3& x) {
  Matrix m(3, 3);
  m << 0.0, -x(2), x(1),
       x(2), 0.0, -x(0),
       -x(1), x(0), 0.0;
  return SkewMatrix::skew_part(m);
}

Vector3 vee(const SkewMatrix& x) {
  if (x.dim() != 3) throw Error(Errc::dimension, "vee is only defined on so(3)");
  return Vector3(x(2, 1), x(0, 2), x(1, 0));
}

RotationMatrix rodrigues_exp(const SkewMatrix& x) {
  if (x.dim() != 3) throw Error(Errc::dimension, "rodrigues_exp expects a 3x3 skew matrix");
  const double angle = vee(x).norm();
  double a;  // sin(angle)/angle
  double b;  // (1 - cos(angle))/angle^2
  if (angle < 1e-4) {
    const double a2 = angle * angle;
    a = 1.0 - a2 / 6.0 + a2 * a2 / 120.0;
    b = 0.5 - a2 / 24.0 + a2 * a2 / 720.0;
  } else {
    a = std::sin(angle) / angle;
    b = (1.0 - std::cos(angle)) / (angle * angle);
  }
  const Matrix& m = x.matrix();
  return RotationMatrix::unchecked(Matrix::Identity(3, 3) + a * m + b * (m * m));
}

RotationMatrix expm(const SkewMatrix& x) {
  return RotationMatrix::unchecked(x.matrix().exp());
}

RotationMatrix exp_so(const SkewMatrix& x) {
  return x.dim() == 3 ? rodrigues_exp(x) : expm(x);
}

namespace {

SkewMatrix log_so3(const Matrix& r) {
  const double cos_angle = std::clamp(0.5 * (r.trace() - 1.0), -1.0, 1.0);
  const Matrix asym = 0.5 * (r - r.transpose());
  const Vector3 s(asym(2, 1), asym(0, 2), asym(1, 0));  // sin(angle) * axis
  const double sin_angle = s.norm();
  const double angle = std::atan2(sin_angle, cos_angle);

  if (angle < 1e-4) {
    // angle / sin(angle) by series
    const double a2 = angle * angle;
    return hat(s * (1.0 + a2 / 6.0 + 7.0 * a2 * a2 / 360.0));
  }
  if (std::numbers::pi - angle > 1e-3) {
    return hat(s * (angle / sin_angle));
  }
  // Near a half-turn the skew part carries no usable axis information; read
  // the axis off the symmetric part sym(R) - c I = (1 - c) u u^T.
  const Matrix b = 0.5 * (r + r.transpose()) - cos_angle * Matrix::Identity(3, 3);
  Index k = 0;
  b.diagonal().maxCoeff(&k);
  Vector3 axis = b.col(k);
  axis.normalize();
  if (axis.dot(s) < 0.0) axis = -axis;
  return hat(axis * angle);
}

}  // namespace

SkewMatrix log_so(const RotationMatrix& r) {
  if (r.dim() == 3) return log_so3(r.matrix());
  const Matrix l = r.matrix().log();
  return SkewMatrix::skew_part(l);
}

SkewMatrix adjoint(const RotationMatrix& g, const SkewMatrix& x) {
  if (g.dim() != x.dim()) throw Error(Errc::dimension, "adjoint: dimension mismatch");
  return SkewMatrix::skew_part(g.matrix() * x.matrix() * g.matrix().transpose());
}

// ---------------------------------------------------------------------------
// Inner products

double algebra_inner(const SkewMatrix& x, const SkewMatrix& y, InnerMode mode) {
  if (x.dim() != y.dim()) throw Error(Errc::dimension, "algebra_inner: dimension mismatch");
  // For skew matrices Tr(X Y^T) = -Tr(X Y) = sum_ij X_ij Y_ij.
  const double frob = x.matrix().cwiseProduct(y.matrix()).sum();
  switch (mode) {
    case InnerMode::frobenius:
      return frob;
    case InnerMode::killing_scaled:
      if (x.dim() < 3) {
        throw Error(Errc::configuration,
                    "the scaled Killing form vanishes on so(2); use the frobenius inner product");
      }
      return static_cast<double>(x.dim() - 2) * frob;
  }
  throw Error(Errc::configuration, "unknown inner product mode");
}

double algebra_norm(const SkewMatrix& x, InnerMode mode) {
  return std::sqrt(std::max(0.0, algebra_inner(x, x, mode)));
}

// ---------------------------------------------------------------------------
// Reductive decomposition

ReductiveSplit reductive_project(const SkewMatrix& x, Index p, ReductiveMode mode) {
  const Index n = x.dim();
  if (p <= 0 || p >= n) {
    throw Error(Errc::dimension, "reductive_project: block size p=" + std::to_string(p) +
                                     " out of range for n=" + std::to_string(n));
  }
  Matrix h = Matrix::Zero(n, n);
  const Index q = n - p;
  h.bottomRightCorner(q, q) = x.matrix().bottomRightCorner(q, q);
  if (mode == ReductiveMode::grassmann) {
    h.topLeftCorner(p, p) = x.matrix().topLeftCorner(p, p);
  }
  Matrix m = x.matrix() - h;
  return ReductiveSplit{p, SkewMatrix::skew_part(h), SkewMatrix::skew_part(m)};
}

}  // namespace homshape
