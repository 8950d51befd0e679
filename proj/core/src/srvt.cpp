#include "homshape/srvt.hpp"

#include <cmath>
#include <string>

#include "homshape/evolution.hpp"

namespace homshape {

AlgebraPath scale(const AlgebraPath& q) {
  std::vector<SkewMatrix> out;
  out.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double nrm = algebra_norm(q.value(i), q.inner());
    if (!(nrm > kZeroValueTolerance)) {
      throw Error(Errc::degenerate_velocity, "zero transported velocity", i);
    }
    out.push_back(q.value(i) * (1.0 / std::sqrt(nrm)));
  }
  return q.with_values(std::move(out));
}

AlgebraPath unscale(const AlgebraPath& q) {
  std::vector<SkewMatrix> out;
  out.reserve(q.size());
  for (const auto& v : q.values()) out.push_back(v * algebra_norm(v, q.inner()));
  return q.with_values(std::move(out));
}

AlgebraPath srvt(const DiscreteCurve& c, InnerMode inner, const FitOptions& options) {
  const AlgebraPath xi = velocity_path(c, inner, options);
  AlgebraPath q = scale(xi);
  return q.with_values(q.values(), TransformKind::srvt);
}

namespace {

void check_values(const AlgebraPath& q, const InverseOptions& options) {
  if (q.size() == 0 && !options.allow_point) {
    throw Error(Errc::domain, "algebra path has no segments");
  }
  if (options.allow_flat) return;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!(algebra_norm(q.value(i), q.inner()) > kZeroValueTolerance)) {
      throw Error(Errc::degenerate_velocity, "zero value would make the curve stationary", i);
    }
  }
}

}  // namespace

DiscreteCurve srvt_inverse(const AlgebraPath& q, const InverseOptions& options) {
  check_values(q, options);
  return rho_evolution(q.base(), unscale(q));
}

AlgebraPath psi(const AlgebraPath& q) {
  const std::vector<RotationMatrix> g = evolve_group(q);
  std::vector<SkewMatrix> out;
  out.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out.push_back(-adjoint(g[i].inverse(), q.value(i)));
  return q.with_values(std::move(out));
}

AlgebraPath psi_g0(const AlgebraPath& q, const RotationMatrix& g0) {
  if (g0.dim() != q.spec().n) throw Error(Errc::dimension, "psi_g0: frame dimension mismatch");
  AlgebraPath p = psi(q);
  std::vector<SkewMatrix> out;
  out.reserve(p.size());
  for (const auto& v : p.values()) out.push_back(adjoint(g0, v));
  return p.with_values(std::move(out));
}

AlgebraPath reductive_srvt(const DiscreteCurve& c, const std::optional<RotationMatrix>& g0, InnerMode inner,
                           const FitOptions& options) {
  const std::vector<SkewMatrix> inc = segment_increments(c, options);
  std::vector<RotationMatrix> frames;
  frames.reserve(c.size());
  if (g0) {
    if (!(point_distance(act(*g0, origin(c.spec())), c.sample(0)) <= 1e-9)) {
      throw Error(Errc::base_mismatch, "frame does not map the origin onto the curve's first sample");
    }
    frames.push_back(*g0);
  } else {
    frames.push_back(lift_to_group(c.sample(0)));
  }
  for (const auto& a : inc) frames.push_back(exp_so(a) * frames.back());
  std::vector<SkewMatrix> vals;
  vals.reserve(inc.size());
  for (std::size_t i = 0; i < inc.size(); ++i) {
    const SkewMatrix local = adjoint(frames[i].inverse(), inc[i]);
    const SkewMatrix m = reductive_split(c.spec(), local).m_part;
    vals.push_back(m * (-1.0 / c.dt(i)));
  }
  AlgebraPath xi(c.spec(), c.grid(), std::move(vals), c.sample(0), inner, TransformKind::reductive);
  xi.set_frame(frames.front());
  return scale(xi);
}

DiscreteCurve reductive_srvt_inverse(const AlgebraPath& q, const RotationMatrix& g0,
                                     const InverseOptions& options) {
  check_values(q, options);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double h = reductive_split(q.spec(), q.value(i)).h_part.matrix().norm();
    if (h > 1e-8) {
      throw Error(Errc::invalid_reductive_path,
                  "value has an isotropy component of norm " + std::to_string(h), i);
    }
  }
  if (!(point_distance(act(g0, origin(q.spec())), q.base()) <= 1e-9)) {
    throw Error(Errc::base_mismatch, "frame does not map the origin onto the path's base point");
  }
  return rho_evolution(q.base(), psi_g0(unscale(q), g0));
}

DiscreteCurve reductive_srvt_inverse(const AlgebraPath& q, const InverseOptions& options) {
  const RotationMatrix g0 = q.frame() ? *q.frame() : lift_to_group(q.base());
  return reductive_srvt_inverse(q, g0, options);
}

AlgebraPath transform(const DiscreteCurve& c, TransformKind kind, InnerMode inner,
                      const std::optional<RotationMatrix>& g0) {
  switch (kind) {
    case TransformKind::srvt: return srvt(c, inner);
    case TransformKind::reductive: return reductive_srvt(c, g0, inner);
    case TransformKind::velocity: return velocity_path(c, inner);
  }
  throw Error(Errc::configuration, "unknown transform kind");
}

DiscreteCurve inverse_transform(const AlgebraPath& q, const InverseOptions& options) {
  switch (q.kind()) {
    case TransformKind::srvt: return srvt_inverse(q, options);
    case TransformKind::reductive: return reductive_srvt_inverse(q, options);
    case TransformKind::velocity:
      if (q.size() == 0 && !options.allow_point) throw Error(Errc::domain, "algebra path has no segments");
      return rho_evolution(q.base(), q);
  }
  throw Error(Errc::configuration, "unknown transform kind");
}

}  // namespace homshape
