#include "homshape/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace homshape {

Grid uniform_grid(Index segments, double t0, double t1) {
  if (segments < 1) throw Error(Errc::domain, "uniform_grid needs at least one segment");
  if (!(t1 > t0)) throw Error(Errc::domain, "uniform_grid needs t1 > t0");
  Grid g(static_cast<std::size_t>(segments) + 1);
  const double h = (t1 - t0) / static_cast<double>(segments);
  for (Index i = 0; i <= segments; ++i) g[static_cast<std::size_t>(i)] = t0 + h * static_cast<double>(i);
  g.back() = t1;
  return g;
}

void validate_grid(const Grid& grid, std::size_t min_nodes) {
  if (grid.size() < min_nodes) {
    throw Error(Errc::domain, "grid needs at least " + std::to_string(min_nodes) + " nodes, got " +
                                  std::to_string(grid.size()));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw Error(Errc::domain, "grid contains a non-finite time");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw Error(Errc::domain, "grid is not strictly increasing at node " + std::to_string(i));
    }
  }
}

double grid_distance(const Grid& a, const Grid& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// ---------------------------------------------------------------------------

DiscreteCurve::DiscreteCurve(ManifoldSpec spec, Grid grid, std::vector<ManifoldPoint> samples)
    : spec_(spec), grid_(std::move(grid)), samples_(std::move(samples)) {
  spec_.validate();
  validate_grid(grid_, 2);
  if (samples_.size() != grid_.size()) {
    throw Error(Errc::dimension, "curve has " + std::to_string(samples_.size()) +
                                     " samples on a grid of " + std::to_string(grid_.size()));
  }
  for (const auto& x : samples_) {
    if (!(x.spec() == spec_)) throw Error(Errc::dimension, "curve sample has a different manifold spec");
  }
}

DiscreteCurve DiscreteCurve::point(ManifoldPoint sample, double t0) {
  DiscreteCurve c;
  c.spec_ = sample.spec();
  c.grid_ = Grid{t0};
  c.samples_.push_back(std::move(sample));
  return c;
}

double DiscreteCurve::max_constraint_defect() const {
  double d = 0.0;
  for (const auto& x : samples_) d = std::max(d, x.constraint_defect());
  return d;
}

double max_sample_deviation(const DiscreteCurve& a, const DiscreteCurve& b) {
  if (a.size() != b.size() || !(a.spec() == b.spec())) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, point_distance(a.sample(i), b.sample(i)));
  return d;
}

// ---------------------------------------------------------------------------

TransformKind parse_transform_kind(std::string_view name) {
  if (name == "srvt") return TransformKind::srvt;
  if (name == "reductive") return TransformKind::reductive;
  if (name == "velocity") return TransformKind::velocity;
  throw Error(Errc::configuration, "unknown transform '" + std::string(name) + "'");
}

std::string_view to_string(TransformKind kind) noexcept {
  switch (kind) {
    case TransformKind::velocity: return "velocity";
    case TransformKind::srvt: return "srvt";
    case TransformKind::reductive: return "reductive";
  }
  return "unknown";
}

AlgebraPath::AlgebraPath(ManifoldSpec spec, Grid grid, std::vector<SkewMatrix> values,
                         ManifoldPoint base, InnerMode inner, TransformKind kind)
    : spec_(spec), grid_(std::move(grid)), values_(std::move(values)), base_(std::move(base)),
      inner_(inner), kind_(kind) {
  spec_.validate();
  validate_grid(grid_, 1);
  if (values_.size() + 1 != grid_.size()) {
    throw Error(Errc::dimension, "algebra path has " + std::to_string(values_.size()) +
                                     " values on a grid of " + std::to_string(grid_.size()));
  }
  for (const auto& v : values_) {
    if (v.dim() != spec_.n) throw Error(Errc::dimension, "algebra path value has the wrong dimension");
  }
  if (!(base_.spec() == spec_)) throw Error(Errc::dimension, "algebra path base has a different spec");
}

AlgebraPath AlgebraPath::with_values(std::vector<SkewMatrix> values, TransformKind kind) const {
  AlgebraPath out(spec_, grid_, std::move(values), base_, inner_, kind);
  out.frame_ = frame_;
  return out;
}

double max_value_deviation(const AlgebraPath& a, const AlgebraPath& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.value(i).dim() != b.value(i).dim()) return std::numeric_limits<double>::infinity();
    d = std::max(d, (a.value(i).matrix() - b.value(i).matrix()).norm());
  }
  return d;
}

// ---------------------------------------------------------------------------

ReparamMap::ReparamMap(Grid grid, std::vector<double> s) : grid_(std::move(grid)), s_(std::move(s)) {
  validate_grid(grid_, 2);
  if (s_.size() != grid_.size()) throw Error(Errc::invalid_warp, "warp and grid sizes differ");
  const double span = grid_.back() - grid_.front();
  const double tol = 1e-12 * std::max(1.0, span);
  if (std::abs(s_.front() - grid_.front()) > tol || std::abs(s_.back() - grid_.back()) > tol) {
    throw Error(Errc::invalid_warp, "warp must fix the grid endpoints");
  }
  s_.front() = grid_.front();
  s_.back() = grid_.back();
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (!std::isfinite(s_[i])) throw Error(Errc::invalid_warp, "warp has a non-finite value");
    if (i > 0 && s_[i] < s_[i - 1]) {
      throw Error(Errc::invalid_warp, "warp decreases at node " + std::to_string(i));
    }
  }
}

ReparamMap ReparamMap::identity(const Grid& grid) { return ReparamMap(grid, grid); }

bool ReparamMap::strictly_increasing() const {
  for (std::size_t i = 1; i < s_.size(); ++i) {
    if (!(s_[i] > s_[i - 1])) return false;
  }
  return true;
}

namespace {

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - xs.begin()) - 1;
  const double w = (x - xs[k]) / (xs[k + 1] - xs[k]);
  return ys[k] + w * (ys[k + 1] - ys[k]);
}

}  // namespace

double ReparamMap::operator()(double t) const { return interpolate(grid_, s_, t); }

ReparamMap ReparamMap::inverse() const {
  if (!strictly_increasing()) throw Error(Errc::invalid_warp, "only strictly increasing warps are invertible");
  std::vector<double> inv(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) inv[i] = interpolate(s_, grid_, grid_[i]);
  return ReparamMap(grid_, std::move(inv));
}

}  // namespace homshape
