#include "homshape/reparam.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace homshape {

namespace {

void check_pair(const AlgebraPath& q1, const AlgebraPath& q2) {
  if (!(q1.spec() == q2.spec())) throw Error(Errc::dimension, "paths live on different manifolds");
  if (q1.grid().size() != q2.grid().size() || grid_distance(q1.grid(), q2.grid()) > 1e-12) {
    throw Error(Errc::grid_mismatch, "paths must share one grid");
  }
  if (q1.size() < 1) throw Error(Errc::domain, "paths need at least one segment");
}

}  // namespace

ArcCostEvaluator::ArcCostEvaluator(const AlgebraPath& q1, const AlgebraPath& q2, bool unscaled_cost)
    : n_(static_cast<Index>(q1.size())), grid_(q1.grid()), literal_(unscaled_cost) {
  check_pair(q1, q2);
  gram_.resize(n_, n_);
  norm1_.resize(n_);
  norm2_.resize(n_);
  const InnerMode mode = q1.inner();
  mass1_ = Vector::Zero(n_ + 1);
  mass2_ = Vector::Zero(n_ + 1);
  for (Index a = 0; a < n_; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    norm1_(a) = algebra_inner(q1.value(ua), q1.value(ua), mode);
    norm2_(a) = algebra_inner(q2.value(ua), q2.value(ua), mode);
    const double h = grid_[ua + 1] - grid_[ua];
    mass1_(a + 1) = mass1_(a) + h * norm1_(a);
    mass2_(a + 1) = mass2_(a) + h * norm2_(a);
    for (Index b = 0; b < n_; ++b) {
      gram_(a, b) = algebra_inner(q1.value(ua), q2.value(static_cast<std::size_t>(b)), mode);
    }
  }
}

double ArcCostEvaluator::operator()(Index k, Index l, Index i, Index j) const {
  if (!(0 <= k && k < i && i <= n_ && 0 <= l && l < j && j <= n_)) {
    throw Error(Errc::invalid_arc, "arc (" + std::to_string(k) + "," + std::to_string(l) + ") -> (" +
                                       std::to_string(i) + "," + std::to_string(j) + ") is not strictly monotone");
  }
  return cost_unchecked(k, l, i, j);
}

double ArcCostEvaluator::cost_unchecked(Index k, Index l, Index i, Index j) const {
  const double* t = grid_.data();
  const double t0 = t[k];
  const double t1 = t[i];
  const double u0 = t[l];
  const double sigma = (t[j] - u0) / (t1 - t0);
  const double inv_sigma = 1.0 / sigma;
  const double r = literal_ ? 1.0 : std::sqrt(sigma);

  // |q1|^2 and |q2 o tau|^2 integrate in closed form; only the cross term
  // needs the merged breakpoints.
  const double own1 = mass1_(i) - mass1_(k);
  const double own2 = (mass2_(j) - mass2_(l)) * inv_sigma;

  double cross = 0.0;
  double x = t0;
  Index a = k;
  Index b = l;
  while (a < i && b < j) {
    const double ta = t[a + 1];
    const double ub = b + 1 < j ? t0 + (t[b + 1] - u0) * inv_sigma : t1;
    const double y = ta < ub ? ta : ub;
    cross += (y - x) * gram_(a, b);
    if (ta <= y) ++a;
    if (ub <= y) ++b;
    x = y;
  }
  return std::max(0.0, own1 - 2.0 * r * cross + r * r * own2);
}

double local_cost(const AlgebraPath& q1, const AlgebraPath& q2, Index i, Index j, Index k, Index l,
                  bool unscaled_cost) {
  return ArcCostEvaluator(q1, q2, unscaled_cost)(k, l, i, j);
}

ReparamMap warp_from_path(const Grid& grid, const LatticePath& path) {
  if (path.size() < 2 || path.front() != LatticeNode{0, 0}) {
    throw Error(Errc::invalid_warp, "lattice path must start at (0, 0)");
  }
  const auto T = [&grid](Index m) { return grid[static_cast<std::size_t>(m)]; };
  std::vector<double> s(grid.size());
  std::size_t m = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    while (m + 2 < path.size() && T(path[m + 1].first) < t) ++m;
    const auto [p0, q0] = path[m];
    const auto [p1, q1] = path[m + 1];
    const double w = (t - T(p0)) / (T(p1) - T(p0));
    s[i] = T(q0) + (T(q1) - T(q0)) * w;
  }
  return ReparamMap(grid, std::move(s));
}

ReparamResult reparametrise(const AlgebraPath& q1, const AlgebraPath& q2, const ReparamOptions& options) {
  const ArcCostEvaluator cost(q1, q2, options.unscaled_cost);
  const Index n = cost.segments();
  const Index w = options.window <= 0 ? n : std::min(options.window, n);

  DPTable table;
  table.cost = Matrix::Constant(n + 1, n + 1, DPTable::unreachable);
  table.pred.assign(static_cast<std::size_t>(n + 1),
                    std::vector<LatticeNode>(static_cast<std::size_t>(n + 1), LatticeNode{-1, -1}));
  table.cost(0, 0) = 0.0;

  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) {
      double best = DPTable::unreachable;
      LatticeNode arg{-1, -1};
      for (Index k = std::max<Index>(0, i - w); k < i; ++k) {
        for (Index l = std::max<Index>(0, j - w); l < j; ++l) {
          const double prev = table.cost(k, l);
          if (!std::isfinite(prev)) continue;
          const double c = cost(k, l, i, j) + prev;
          if (c < best) {
            best = c;
            arg = {k, l};
          }
        }
      }
      table.cost(i, j) = best;
      table.pred[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = arg;
    }
  }

  if (!std::isfinite(table.cost(n, n))) {
    throw Error(Errc::invalid_warp, "no admissible path reaches (N, N)");
  }
  LatticePath path{{n, n}};
  while (path.back() != LatticeNode{0, 0}) {
    const auto [i, j] = path.back();
    path.push_back(table.pred[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  std::reverse(path.begin(), path.end());

  ReparamResult out;
  out.warp = warp_from_path(q1.grid(), path);
  out.cost = table.cost(n, n);
  out.path = std::move(path);
  out.table = std::move(table);
  return out;
}

double path_cost(const ArcCostEvaluator& cost, const LatticePath& path) {
  double total = 0.0;
  for (std::size_t m = 1; m < path.size(); ++m) {
    total = cost(path[m - 1].first, path[m - 1].second, path[m].first, path[m].second) + total;
  }
  return total;
}

BruteForceResult brute_force_reparam(const AlgebraPath& q1, const AlgebraPath& q2, bool unscaled_cost) {
  check_pair(q1, q2);
  const Index n = static_cast<Index>(q1.size());
  if (n > kBruteForceMaxSegments) {
    throw Error(Errc::too_large, "brute force enumeration is limited to N <= " +
                                     std::to_string(kBruteForceMaxSegments));
  }
  const ArcCostEvaluator cost(q1, q2, unscaled_cost);

  BruteForceResult best;
  best.cost = DPTable::unreachable;
  LatticePath current{{0, 0}};

  // Among equal costs prefer the path whose nodes, read backwards from
  // (N, N), are lexicographically smallest.
  const auto better = [](const LatticePath& a, const LatticePath& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  };

  std::function<void(double)> extend = [&](double acc) {
    const auto [k, l] = current.back();
    if (k == n && l == n) {
      if (acc < best.cost || (acc == best.cost && better(current, best.path))) {
        best.cost = acc;
        best.path = current;
      }
      return;
    }
    for (Index i = k + 1; i <= n; ++i) {
      for (Index j = l + 1; j <= n; ++j) {
        const double c = cost(k, l, i, j) + acc;
        current.push_back({i, j});
        extend(c);
        current.pop_back();
      }
    }
  };
  extend(0.0);
  return best;
}

}  // namespace homshape
