#pragma once

// Dense kernels for SO(n) and its Lie algebra so(n).

#include <string_view>

#include <Eigen/Core>

#include "homshape/error.hpp"

namespace homshape {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Vector3 = Eigen::Vector3d;
using Index = Eigen::Index;

/// Inner product on so(n). `killing_scaled` is -(n-2) Tr(XY), which is
/// positive definite for n >= 3 and coincides with `frobenius` for n = 3.
enum class InnerMode { killing_scaled, frobenius };

InnerMode parse_inner_mode(std::string_view name);
std::string_view to_string(InnerMode mode) noexcept;

/// Tolerance on the symmetric part accepted by the checked SkewMatrix
/// constructor.
inline constexpr double kSkewTolerance = 1e-8;
/// Orthogonality / determinant tolerance for RotationMatrix.
inline constexpr double kRotationTolerance = 1e-10;

class SkewMatrix {
 public:
  SkewMatrix() = default;

  /// Symmetrises `m` to (m - m^T)/2; throws Errc::not_skew if the symmetric
  /// part of `m` exceeds kSkewTolerance in Frobenius norm.
  explicit SkewMatrix(const Matrix& m);

  static SkewMatrix zero(Index n);
  /// Keeps the skew part of `m` without checking the discarded symmetric part.
  static SkewMatrix skew_part(const Matrix& m);

  Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  double operator()(Index i, Index j) const { return m_(i, j); }

  SkewMatrix& operator+=(const SkewMatrix& other);
  SkewMatrix& operator-=(const SkewMatrix& other);
  SkewMatrix& operator*=(double s);

  friend SkewMatrix operator+(SkewMatrix a, const SkewMatrix& b) { return a += b; }
  friend SkewMatrix operator-(SkewMatrix a, const SkewMatrix& b) { return a -= b; }
  friend SkewMatrix operator*(double s, SkewMatrix a) { return a *= s; }
  friend SkewMatrix operator*(SkewMatrix a, double s) { return a *= s; }
  friend SkewMatrix operator-(SkewMatrix a) { return a *= -1.0; }

 private:
  struct Trusted {};
  SkewMatrix(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

class RotationMatrix {
 public:
  RotationMatrix() = default;

  /// Throws Errc::not_rotation unless R^T R = I and det R = 1 within `tol`.
  explicit RotationMatrix(const Matrix& m, double tol = kRotationTolerance);

  static RotationMatrix identity(Index n);
  /// Wraps `m` without checks; for results of exponentials and products.
  static RotationMatrix unchecked(Matrix m);

  Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }

  RotationMatrix inverse() const { return unchecked(m_.transpose()); }
  /// ||R^T R - I||_F.
  double orthogonality_defect() const;

  friend RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b) {
    return unchecked(a.m_ * b.m_);
  }

 private:
  Matrix m_;
};

SkewMatrix hat(const Vector3& x);
Vector3 vee(const SkewMatrix& x);

/// Closed-form exponential on so(3). Uses Taylor expansions of the two
/// trigonometric coefficients below an angle of 1e-4.
RotationMatrix rodrigues_exp(const SkewMatrix& x);

/// General matrix exponential (scaling and squaring with a Pade core).
RotationMatrix expm(const SkewMatrix& x);

/// Exponential used by the curve pipelines: Rodrigues for n = 3, expm
/// otherwise.
RotationMatrix exp_so(const SkewMatrix& x);

/// Principal logarithm of a rotation. Closed form for n = 3 (including the
/// half-turn branch); general n goes through a real Schur logarithm.
SkewMatrix log_so(const RotationMatrix& r);

/// g X g^{-1}.
SkewMatrix adjoint(const RotationMatrix& g, const SkewMatrix& x);

double algebra_inner(const SkewMatrix& x, const SkewMatrix& y,
                     InnerMode mode = InnerMode::killing_scaled);
double algebra_norm(const SkewMatrix& x, InnerMode mode = InnerMode::killing_scaled);

enum class ReductiveMode { stiefel, grassmann };

/// X = h_part + m_part with h_part in the isotropy algebra and m_part in the
/// reductive complement. Stiefel: h is the embedded lower-right so(n-p)
/// block. Grassmann: h is so(p) + so(n-p) (both diagonal blocks).
struct ReductiveSplit {
  Index p = 0;
  SkewMatrix h_part;
  SkewMatrix m_part;
};

ReductiveSplit reductive_project(const SkewMatrix& x, Index p, ReductiveMode mode);

}  // namespace homshape
