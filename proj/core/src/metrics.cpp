#include "homshape/metrics.hpp"

#include <cmath>
#include <string>

#include <Eigen/Geometry>

namespace homshape {

double l2_distance(const AlgebraPath& q1, const AlgebraPath& q2) {
  if (q1.size() != q2.size() || grid_distance(q1.grid(), q2.grid()) > 1e-12) {
    throw Error(Errc::grid_mismatch, "l2_distance needs paths on one grid");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < q1.size(); ++i) {
    const SkewMatrix d = q1.value(i) - q2.value(i);
    sum += q1.dt(i) * algebra_inner(d, d, q1.inner());
  }
  return std::sqrt(std::max(0.0, sum));
}

RotationMatrix start_alignment(const ManifoldPoint& target, const ManifoldPoint& source) {
  if (!(target.spec() == source.spec())) throw Error(Errc::dimension, "start_alignment: manifold mismatch");
  if (target.spec().kind == ManifoldKind::sphere) {
    const Vector3 s = source.coords().col(0);
    const Vector3 t = target.coords().col(0);
    Vector3 axis = s.cross(t);
    const double sn = axis.norm();
    const double angle = std::atan2(sn, s.dot(t));
    if (sn < 1e-12) {
      if (s.dot(t) > 0.0) return RotationMatrix::identity(3);
      // Half-turn about any axis orthogonal to s.
      Index k = 0;
      s.cwiseAbs().minCoeff(&k);
      axis = s.cross(Vector3::Unit(k)).normalized();
    } else {
      axis /= sn;
    }
    return rodrigues_exp(hat(angle * axis));
  }
  const RotationMatrix ft = lift_to_group(target);
  const RotationMatrix fs = lift_to_group(source);
  return ft * fs.inverse();
}

DiscreteCurve act(const RotationMatrix& g, const DiscreteCurve& c) {
  std::vector<ManifoldPoint> samples;
  samples.reserve(c.size());
  for (const auto& x : c.samples()) samples.push_back(act(g, x));
  return DiscreteCurve(c.spec(), c.grid(), std::move(samples));
}

namespace {

constexpr double kBaseTolerance = 1e-9;

std::optional<RotationMatrix> shared_frame(TransformKind kind, const DiscreteCurve& c1) {
  if (kind != TransformKind::reductive) return std::nullopt;
  return lift_to_group(c1.sample(0));
}

}  // namespace

ShapeDistanceReport shape_distance(const DiscreteCurve& c1, const DiscreteCurve& c2,
                                   const ShapeDistanceOptions& options) {
  if (!(c1.spec() == c2.spec())) throw Error(Errc::dimension, "shape_distance: curves on different manifolds");
  if (options.transform == TransformKind::velocity) {
    throw Error(Errc::configuration, "shape_distance needs the srvt or reductive transform");
  }
  DiscreteCurve a = options.resample > 0 ? resample(c1, options.resample) : c1;
  DiscreteCurve b = options.resample > 0 ? resample(c2, options.resample) : c2;
  if (a.size() != b.size() || grid_distance(a.grid(), b.grid()) > 1e-12) {
    throw Error(Errc::grid_mismatch, "curves must share a grid when resampling is disabled");
  }
  if (!(point_distance(a.sample(0), b.sample(0)) <= kBaseTolerance)) {
    if (!options.align_start) {
      throw Error(Errc::base_mismatch, "curves start at different points; enable start alignment");
    }
    b = act(start_alignment(a.sample(0), b.sample(0)), b);
  }

  const auto g0 = shared_frame(options.transform, a);
  const AlgebraPath q1 = transform(a, options.transform, options.inner, g0);
  const AlgebraPath q2 = transform(b, options.transform, options.inner, g0);

  ShapeDistanceReport rep;
  rep.transform = options.transform;
  rep.d_param = l2_distance(q1, q2);

  const ReparamResult dp = reparametrise(q1, q2, options.reparam);
  rep.dp_cost = dp.cost;
  DiscreteCurve warped = reparametrise_curve(b, dp.warp);
  const AlgebraPath q2w = transform(warped, options.transform, options.inner, g0);
  rep.d_shape = l2_distance(q1, q2w);
  rep.warp = dp.warp;
  rep.aligned = std::move(warped);
  if (rep.d_shape > rep.d_param) {
    rep.d_shape = rep.d_param;
    rep.warp = ReparamMap::identity(a.grid());
    rep.aligned = std::move(b);
    rep.identity_fallback = true;
  }
  return rep;
}

AlgebraPath interpolate_paths(const AlgebraPath& q1, const AlgebraPath& q2, double theta) {
  if (q1.size() != q2.size() || grid_distance(q1.grid(), q2.grid()) > 1e-12) {
    throw Error(Errc::grid_mismatch, "interpolation needs paths on one grid");
  }
  std::vector<SkewMatrix> out;
  out.reserve(q1.size());
  for (std::size_t i = 0; i < q1.size(); ++i) {
    SkewMatrix v = (1.0 - theta) * q1.value(i) + theta * q2.value(i);
    if (!(algebra_norm(v, q1.inner()) > kZeroValueTolerance)) {
      throw Error(Errc::degenerate_intermediate,
                  "interpolated value vanishes at theta = " + std::to_string(theta), i);
    }
    out.push_back(std::move(v));
  }
  return q1.with_values(std::move(out));
}

DiscreteCurve geodesic_interpolate(const DiscreteCurve& c1, const DiscreteCurve& c2, double theta,
                                   TransformKind kind, InnerMode inner) {
  if (!(c1.spec() == c2.spec())) throw Error(Errc::dimension, "geodesic_interpolate: manifold mismatch");
  if (c1.size() != c2.size() || grid_distance(c1.grid(), c2.grid()) > 1e-12) {
    throw Error(Errc::grid_mismatch, "geodesic_interpolate needs curves on one grid");
  }
  if (!(point_distance(c1.sample(0), c2.sample(0)) <= kBaseTolerance)) {
    throw Error(Errc::base_mismatch, "geodesic_interpolate needs curves with a common start point");
  }
  if (kind == TransformKind::velocity) throw Error(Errc::configuration, "interpolation needs srvt or reductive");
  const auto g0 = shared_frame(kind, c1);
  const AlgebraPath q1 = transform(c1, kind, inner, g0);
  const AlgebraPath q2 = transform(c2, kind, inner, g0);
  return inverse_transform(interpolate_paths(q1, q2, theta));
}

DiscreteCurve perturb(const DiscreteCurve& c, const TangentField& v, double eps) {
  if (v.size() != c.size()) throw Error(Errc::dimension, "tangent field size differs from the curve");
  std::vector<ManifoldPoint> samples;
  samples.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const TangentVector tv(c.sample(i), v[i]);
    samples.push_back(act(exp_so(eps * alpha(tv)), c.sample(i)));
  }
  return DiscreteCurve(c.spec(), c.grid(), std::move(samples));
}

namespace {

std::vector<SkewMatrix> directional_derivative(const DiscreteCurve& c, const TangentField& v, TransformKind kind,
                                               InnerMode inner, double eps) {
  const AlgebraPath plus = transform(perturb(c, v, eps), kind, inner);
  const AlgebraPath minus = transform(perturb(c, v, -eps), kind, inner);
  std::vector<SkewMatrix> d;
  d.reserve(plus.size());
  for (std::size_t i = 0; i < plus.size(); ++i) {
    d.push_back((plus.value(i) - minus.value(i)) * (0.5 / eps));
  }
  return d;
}

}  // namespace

double pullback_metric(const DiscreteCurve& c, const TangentField& v, const TangentField& w, TransformKind kind,
                       InnerMode inner, double eps) {
  if (kind == TransformKind::velocity) throw Error(Errc::configuration, "pullback metric needs srvt or reductive");
  const auto dv = directional_derivative(c, v, kind, inner, eps);
  const auto dw = directional_derivative(c, w, kind, inner, eps);
  double sum = 0.0;
  for (std::size_t i = 0; i < dv.size(); ++i) sum += c.dt(i) * algebra_inner(dv[i], dw[i], inner);
  return sum;
}

double pullback_metric_sphere(const DiscreteCurve& c, const TangentField& v, const TangentField& w) {
  if (c.spec().kind != ManifoldKind::sphere) throw Error(Errc::configuration, "closed form is sphere-only");
  if (v.size() != c.size() || w.size() != c.size()) {
    throw Error(Errc::dimension, "tangent field size differs from the curve");
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    // Rejects non-tangent input the same way the finite-difference route does.
    (void)TangentVector(c.sample(i), v[i]);
    (void)TangentVector(c.sample(i), w[i]);
  }
  const auto inner = [](const Matrix& a, const Matrix& b) { return a.cwiseProduct(b).sum(); };

  double sum = 0.0;
  for (std::size_t i = 0; i < c.segments(); ++i) {
    const Vector3 x = c.sample(i).coords().col(0);
    const Vector3 y = c.sample(i + 1).coords().col(0);
    const double h = c.dt(i);
    const double d = std::clamp(x.dot(y), -1.0, 1.0);
    const double s2 = 1.0 - d * d;
    if (!(s2 > 1e-24)) throw Error(Errc::degenerate_segment, "segment endpoints coincide or are antipodal", i);
    const double f = std::acos(d) / std::sqrt(s2);
    const double fp = (d * f - 1.0) / s2;

    const Matrix b = y * x.transpose() - x * y.transpose();
    const Matrix xi = (f / h) * b;
    const double xi_norm = std::sqrt(inner(xi, xi));
    const Matrix u = xi / xi_norm;
    const double ds = xi_norm * h;

    const auto variation = [&](const TangentField& field) {
      const Vector3 dx = field[i].col(0);
      const Vector3 dy = field[i + 1].col(0);
      const double dd = dx.dot(y) + x.dot(dy);
      const Matrix db = dy * x.transpose() + y * dx.transpose() - dx * y.transpose() - x * dy.transpose();
      const Matrix dxi = (fp * dd * b + f * db) / h;
      return Matrix(dxi / xi_norm);  // D_s of the variation
    };
    const Matrix dsv = variation(v);
    const Matrix dsw = variation(w);
    const double av = inner(dsv, u);
    const double aw = inner(dsw, u);
    const Matrix nv = dsv - av * u;
    const Matrix nw = dsw - aw * u;
    sum += (0.25 * av * aw + inner(nv, nw)) * ds;
  }
  return sum;
}

}  // namespace homshape
