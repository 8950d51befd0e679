#include "homshape/evolution.hpp"

namespace homshape {

std::vector<RotationMatrix> evolve_group(const AlgebraPath& q) {
  std::vector<RotationMatrix> g;
  g.reserve(q.size() + 1);
  g.push_back(RotationMatrix::identity(q.spec().n));
  for (std::size_t i = 0; i < q.size(); ++i) {
    g.push_back(exp_so(q.dt(i) * q.value(i)) * g.back());
  }
  return g;
}

DiscreteCurve rho_evolution(const ManifoldPoint& c0, const AlgebraPath& q) {
  if (!(c0.spec() == q.spec())) throw Error(Errc::dimension, "rho_evolution: manifold mismatch");
  if (q.size() == 0) return DiscreteCurve::point(c0, q.grid().front());
  std::vector<ManifoldPoint> samples;
  samples.reserve(q.size() + 1);
  samples.push_back(c0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    samples.push_back(act(exp_so(q.dt(i) * q.value(i)), samples.back()));
  }
  return DiscreteCurve(q.spec(), q.grid(), std::move(samples));
}

}  // namespace homshape
