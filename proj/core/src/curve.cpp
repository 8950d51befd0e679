#include "homshape/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace homshape {

namespace {

// Closed-form log on the unit sphere of R^n: b = cos(theta) a + sin(theta) w.
Matrix sphere_log(const Matrix& a, const Matrix& b, std::size_t segment) {
  if ((b - a).norm() <= kCoincidentTolerance) {
    throw Error(Errc::degenerate_segment, "consecutive samples coincide", segment);
  }
  const double d = (a.transpose() * b)(0, 0);
  if (d < -1.0 + 1e-12) throw Error(Errc::degenerate_segment, "consecutive samples are antipodal", segment);
  const Matrix w = b - d * a;
  const double s = w.norm();
  const double theta = std::atan2(s, d);
  double ratio;  // theta / sin(theta)
  if (theta < 1e-4) {
    const double t2 = theta * theta;
    ratio = 1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0;
  } else {
    ratio = theta / s;
  }
  return ratio * w;
}

Matrix grassmann_log(const Matrix& q, const Matrix& qn, std::size_t segment) {
  const Matrix c = q.transpose() * qn;
  const Matrix proj_gap = q * q.transpose() - qn * qn.transpose();
  if (proj_gap.norm() <= kCoincidentTolerance) {
    throw Error(Errc::degenerate_segment, "consecutive subspaces coincide", segment);
  }
  Eigen::JacobiSVD<Matrix> csvd(c);
  if (csvd.singularValues().minCoeff() <= 1e-12) {
    throw Error(Errc::degenerate_segment, "consecutive subspaces have a right principal angle", segment);
  }
  const Matrix m = (qn - q * c) * c.inverse();
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector angles = svd.singularValues().array().atan().matrix();
  return svd.matrixU() * angles.asDiagonal() * svd.matrixV().transpose();
}

// W = [[A, -B^T], [B, 0]] from z = (strict upper entries of A, B row-major).
Matrix stiefel_generator(const Vector& z, Index n, Index p) {
  Matrix w = Matrix::Zero(n, n);
  Index k = 0;
  for (Index r = 0; r < p; ++r) {
    for (Index s = r + 1; s < p; ++s) {
      w(r, s) = z(k);
      w(s, r) = -z(k);
      ++k;
    }
  }
  for (Index r = p; r < n; ++r) {
    for (Index s = 0; s < p; ++s) {
      w(r, s) = z(k);
      w(s, r) = -z(k);
      ++k;
    }
  }
  return w;
}

Vector stiefel_coordinates(const Matrix& w, Index n, Index p) {
  Vector z(p * (p - 1) / 2 + (n - p) * p);
  Index k = 0;
  for (Index r = 0; r < p; ++r) {
    for (Index s = r + 1; s < p; ++s) z(k++) = w(r, s);
  }
  for (Index r = p; r < n; ++r) {
    for (Index s = 0; s < p; ++s) z(k++) = w(r, s);
  }
  return z;
}

Vector flatten(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

// Solves exp(W) I_p = T for W of Stiefel block form, in frame coordinates.
Matrix stiefel_log_frame(const Matrix& t, Index n, Index p, std::size_t segment, const FitOptions& opt) {
  const Matrix e = Matrix::Identity(n, p);
  Matrix w0 = Matrix::Zero(n, n);
  w0.topLeftCorner(p, p) = 0.5 * (t.topRows(p) - t.topRows(p).transpose());
  w0.bottomLeftCorner(n - p, p) = t.bottomRows(n - p);
  Vector z = stiefel_coordinates(w0, n, p);
  const Index m = z.size();

  auto residual = [&](const Vector& zz) {
    return flatten(stiefel_generator(zz, n, p).exp() * e - t);
  };

  Vector r = residual(z);
  double rnorm = r.norm();
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (rnorm <= opt.tolerance) return stiefel_generator(z, n, p);
    const Matrix w = stiefel_generator(z, n, p);
    Matrix jac(n * p, m);
    Matrix block = Matrix::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = w;
    block.bottomRightCorner(n, n) = w;
    for (Index k = 0; k < m; ++k) {
      Vector ek = Vector::Zero(m);
      ek(k) = 1.0;
      block.topRightCorner(n, n) = stiefel_generator(ek, n, p);
      const Matrix dexp = block.exp().topRightCorner(n, n);
      jac.col(k) = flatten(dexp * e);
    }
    const Vector step = jac.colPivHouseholderQr().solve(-r);
    double lambda = 1.0;
    bool improved = false;
    for (int ls = 0; ls < 30; ++ls) {
      const Vector trial = z + lambda * step;
      const Vector rt = residual(trial);
      if (rt.norm() < rnorm) {
        z = trial;
        r = rt;
        rnorm = rt.norm();
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) break;
  }
  if (rnorm <= opt.tolerance) return stiefel_generator(z, n, p);
  throw Error(Errc::lift_failure,
              "Stiefel segment solve did not converge (residual " + std::to_string(rnorm) + ")", segment);
}

Matrix stiefel_log(const ManifoldPoint& a, const Matrix& qn, std::size_t segment, const FitOptions& opt) {
  const Matrix& q = a.coords();
  if ((qn - q).norm() <= kCoincidentTolerance) {
    throw Error(Errc::degenerate_segment, "consecutive samples coincide", segment);
  }
  const Index n = q.rows();
  const Index p = q.cols();
  const Matrix g = lift_to_group(a).matrix();
  const Matrix w = stiefel_log_frame(g.transpose() * qn, n, p, segment, opt);
  return g * w.leftCols(p);
}

Matrix lie_log(const Matrix& g, const Matrix& gn, std::size_t segment) {
  if ((gn - g).norm() <= kCoincidentTolerance) {
    throw Error(Errc::degenerate_segment, "consecutive samples coincide", segment);
  }
  const Matrix rel = gn * g.transpose();
  const SkewMatrix l = log_so(RotationMatrix::unchecked(rel));
  return l.matrix() * g;
}

}  // namespace

TangentVector segment_velocity(const ManifoldPoint& a, const ManifoldPoint& b, std::size_t segment,
                               const FitOptions& options) {
  if (!(a.spec() == b.spec())) throw Error(Errc::dimension, "segment endpoints on different manifolds");
  const ManifoldSpec& spec = a.spec();
  Matrix v;
  switch (spec.kind) {
    case ManifoldKind::sphere:
      v = sphere_log(a.coords(), b.coords(), segment);
      break;
    case ManifoldKind::stiefel:
      v = spec.p == 1 ? sphere_log(a.coords(), b.coords(), segment)
                      : stiefel_log(a, b.coords(), segment, options);
      break;
    case ManifoldKind::grassmann:
      v = grassmann_log(a.coords(), b.coords(), segment);
      break;
    case ManifoldKind::lie_group:
      v = lie_log(a.coords(), b.coords(), segment);
      break;
  }
  TangentVector tv = TangentVector::unchecked(a, project_to_tangent(a, v));
  const ManifoldPoint reached = act(exp_so(alpha(a, tv)), a);
  const double miss = point_distance(reached, b);
  if (!(miss <= 1e-9)) {
    throw Error(Errc::lift_failure, "segment velocity misses the next sample by " + std::to_string(miss),
                segment);
  }
  return tv;
}

std::vector<TangentVector> fit_velocities(const DiscreteCurve& c, const FitOptions& options) {
  std::vector<TangentVector> out;
  out.reserve(c.segments());
  for (std::size_t i = 0; i < c.segments(); ++i) {
    out.push_back(segment_velocity(c.sample(i), c.sample(i + 1), i, options));
  }
  return out;
}

std::vector<SkewMatrix> segment_increments(const DiscreteCurve& c, const FitOptions& options) {
  std::vector<SkewMatrix> out;
  out.reserve(c.segments());
  for (std::size_t i = 0; i < c.segments(); ++i) {
    out.push_back(alpha(segment_velocity(c.sample(i), c.sample(i + 1), i, options)));
  }
  return out;
}

AlgebraPath velocity_path(const DiscreteCurve& c, InnerMode inner, const FitOptions& options) {
  std::vector<SkewMatrix> xi = segment_increments(c, options);
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] *= 1.0 / c.dt(i);
  return AlgebraPath(c.spec(), c.grid(), std::move(xi), c.sample(0), inner, TransformKind::velocity);
}

// ---------------------------------------------------------------------------

CurveInterpolant::CurveInterpolant(DiscreteCurve c, const FitOptions& options)
    : curve_(std::move(c)), increments_(segment_increments(curve_, options)) {}

namespace {

// Segment index k with t_k <= t < t_{k+1}, or N when t == t_N.
std::size_t locate(const Grid& grid, double t) {
  if (!(t >= grid.front() && t <= grid.back())) {
    throw Error(Errc::domain, "time " + std::to_string(t) + " outside [" + std::to_string(grid.front()) +
                                  ", " + std::to_string(grid.back()) + "]");
  }
  const auto it = std::upper_bound(grid.begin(), grid.end(), t);
  return static_cast<std::size_t>(it - grid.begin()) - 1;
}

ManifoldPoint along_segment(const DiscreteCurve& c, std::size_t k, const SkewMatrix& inc, double t) {
  const double s = (t - c.t(k)) / c.dt(k);
  return act(exp_so(s * inc), c.sample(k));
}

}  // namespace

ManifoldPoint CurveInterpolant::operator()(double t) const {
  const std::size_t k = locate(curve_.grid(), t);
  if (curve_.t(k) == t) return curve_.sample(k);
  return along_segment(curve_, k, increments_[k], t);
}

ManifoldPoint evaluate(const DiscreteCurve& c, double t) {
  const std::size_t k = locate(c.grid(), t);
  if (c.t(k) == t) return c.sample(k);
  const SkewMatrix inc = alpha(segment_velocity(c.sample(k), c.sample(k + 1), k));
  return along_segment(c, k, inc, t);
}

// ---------------------------------------------------------------------------

FrameLift lift_frames(const DiscreteCurve& c, const std::optional<RotationMatrix>& g0,
                      const FitOptions& options) {
  FrameLift lift;
  lift.frames.reserve(c.size());
  if (g0) {
    const ManifoldPoint image = act(*g0, origin(c.spec()));
    if (!(point_distance(image, c.sample(0)) <= 1e-9)) {
      throw Error(Errc::base_mismatch, "frame does not map the origin onto the curve's first sample");
    }
    lift.frames.push_back(*g0);
  } else {
    lift.frames.push_back(lift_to_group(c.sample(0)));
  }
  for (std::size_t i = 0; i < c.segments(); ++i) {
    const SkewMatrix inc = alpha(segment_velocity(c.sample(i), c.sample(i + 1), i, options));
    lift.frames.push_back(exp_so(inc) * lift.frames.back());
  }
  return lift;
}

DiscreteCurve reparametrise_curve(const DiscreteCurve& c, const ReparamMap& s) {
  if (std::abs(s.grid().front() - c.front_time()) > 1e-12 ||
      std::abs(s.grid().back() - c.back_time()) > 1e-12) {
    throw Error(Errc::invalid_warp, "warp domain differs from the curve's time interval");
  }
  const CurveInterpolant interp(c);
  std::vector<ManifoldPoint> samples;
  samples.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double si = std::clamp(s[i], c.front_time(), c.back_time());
    samples.push_back(interp(si));
  }
  return DiscreteCurve(c.spec(), s.grid(), std::move(samples));
}

DiscreteCurve resample(const DiscreteCurve& c, Index segments) {
  const Grid grid = uniform_grid(segments, c.front_time(), c.back_time());
  const CurveInterpolant interp(c);
  std::vector<ManifoldPoint> samples;
  samples.reserve(grid.size());
  for (double t : grid) samples.push_back(interp(t));
  return DiscreteCurve(c.spec(), grid, std::move(samples));
}

}  // namespace homshape
