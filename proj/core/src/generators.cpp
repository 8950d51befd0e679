#include "homshape/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace homshape {

using std::numbers::pi;

Matrix rotation_x(double a) {
  Matrix r(3, 3);
  r << 1.0, 0.0, 0.0,
       0.0, std::cos(a), -std::sin(a),
       0.0, std::sin(a), std::cos(a);
  return r;
}

Matrix rotation_y(double a) {
  Matrix r(3, 3);
  r << std::cos(a), 0.0, std::sin(a),
       0.0, 1.0, 0.0,
       -std::sin(a), 0.0, std::cos(a);
  return r;
}

Matrix rotation_z(double a) {
  Matrix r(3, 3);
  r << std::cos(a), -std::sin(a), 0.0,
       std::sin(a), std::cos(a), 0.0,
       0.0, 0.0, 1.0;
  return r;
}

DiscreteCurve sample_curve(const ManifoldSpec& spec, const Grid& grid, const std::function<Matrix(double)>& f) {
  std::vector<ManifoldPoint> samples;
  samples.reserve(grid.size());
  for (double t : grid) samples.emplace_back(spec, f(t));
  return DiscreteCurve(spec, grid, std::move(samples));
}

namespace {

Vector3 e1() { return Vector3::UnitX(); }
Vector3 diag_yz() { return Vector3(0.0, 1.0, 1.0) / std::sqrt(2.0); }

}  // namespace

Vector3 fig1_c1(double t) {
  const double a = pi * t * t * t;
  return rotation_x(a) * rotation_y(a) * rotation_y(a / 2.0) * e1();
}

Vector3 fig1_c2(double t) { return rotation_z(3.0 * pi * t / 4.0) * rotation_x(pi * t) * e1(); }

Vector3 fig2_c1(double t) {
  return rotation_x(2.0 * pi * t) * rotation_y(2.0 * pi * t) * rotation_z(pi * t) * diag_yz();
}

Vector3 fig2_c2(double t) {
  return rotation_z(2.0 * pi * t) * rotation_x(2.0 * pi * t) * rotation_y(pi * t / 2.0) * diag_yz();
}

Vector3 great_circle(double t) { return Vector3(std::cos(pi * t / 2.0), std::sin(pi * t / 2.0), 0.0); }

double sine_warp(double t) { return t + 0.2 * t * (1.0 - t) * std::sin(2.0 * pi * t); }

Generator parse_generator(std::string_view name) {
  if (name == "fig1_c1") return Generator::fig1_c1;
  if (name == "fig1_c2") return Generator::fig1_c2;
  if (name == "fig2_c1") return Generator::fig2_c1;
  if (name == "fig2_c2") return Generator::fig2_c2;
  if (name == "great_circle") return Generator::great_circle;
  if (name == "random_walk") return Generator::random_walk;
  throw Error(Errc::configuration, "unknown generator '" + std::string(name) + "'");
}

std::string_view to_string(Generator g) noexcept {
  switch (g) {
    case Generator::fig1_c1: return "fig1_c1";
    case Generator::fig1_c2: return "fig1_c2";
    case Generator::fig2_c1: return "fig2_c1";
    case Generator::fig2_c2: return "fig2_c2";
    case Generator::great_circle: return "great_circle";
    case Generator::random_walk: return "random_walk";
  }
  return "unknown";
}

DiscreteCurve sample_sphere_curve(const std::function<Vector3(double)>& f, Index segments,
                                  const std::function<double(double)>& warp) {
  const Grid grid = uniform_grid(segments);
  return sample_curve(ManifoldSpec::sphere(), grid, [&](double t) -> Matrix {
    const double s = warp ? warp(t) : t;
    return f(s).normalized();
  });
}

DiscreteCurve generate(Generator g, Index segments, const GeneratorOptions& options) {
  switch (g) {
    case Generator::fig1_c1: return sample_sphere_curve(fig1_c1, segments);
    case Generator::fig1_c2: return sample_sphere_curve(fig1_c2, segments);
    case Generator::fig2_c1: return sample_sphere_curve(fig2_c1, segments);
    case Generator::fig2_c2: return sample_sphere_curve(fig2_c2, segments);
    case Generator::great_circle: return sample_sphere_curve(great_circle, segments);
    case Generator::random_walk: {
      Rng rng(options.seed);
      return random_walk(options.spec, segments, rng, options.length);
    }
  }
  throw Error(Errc::configuration, "unknown generator");
}

// ---------------------------------------------------------------------------

double random_normal(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

Matrix random_gaussian(Index rows, Index cols, Rng& rng) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = random_normal(rng);
  }
  return m;
}

SkewMatrix random_skew(Index n, Rng& rng, double norm) {
  const SkewMatrix x = SkewMatrix::skew_part(random_gaussian(n, n, rng));
  const double fn = x.matrix().norm();
  return fn > 0.0 ? x * (norm / fn) : x;
}

RotationMatrix random_rotation(Index n, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_gaussian(n, n, rng));
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return RotationMatrix::unchecked(std::move(q));
}

ManifoldPoint random_point(const ManifoldSpec& spec, Rng& rng) {
  spec.validate();
  const RotationMatrix g = random_rotation(spec.n, rng);
  return ManifoldPoint::unchecked(spec, g.matrix().leftCols(spec.cols()));
}

Matrix random_tangent(const ManifoldPoint& x, Rng& rng, double norm) {
  const Matrix v = project_to_tangent(x, random_gaussian(x.spec().n, x.spec().cols(), rng));
  const double fn = v.norm();
  return fn > 0.0 ? Matrix(v * (norm / fn)) : v;
}

DiscreteCurve random_walk(const ManifoldSpec& spec, Index segments, Rng& rng, double length) {
  spec.validate();
  const Grid grid = uniform_grid(segments);
  const double step = length / static_cast<double>(segments);
  std::vector<ManifoldPoint> samples;
  samples.reserve(grid.size());
  samples.push_back(random_point(spec, rng));
  Matrix dir = random_tangent(samples.back(), rng);
  for (Index i = 0; i < segments; ++i) {
    const ManifoldPoint& x = samples.back();
    Matrix v = project_to_tangent(x, dir + 0.7 * random_tangent(x, rng));
    v *= step / v.norm();
    const SkewMatrix a = alpha(TangentVector::unchecked(x, v));
    samples.push_back(act(exp_so(a), x));
    dir = project_to_tangent(samples.back(), exp_so(a).matrix() * v);
    dir /= dir.norm();
  }
  return DiscreteCurve(spec, grid, std::move(samples));
}

AlgebraPath random_path(const ManifoldSpec& spec, Index segments, Rng& rng, InnerMode inner) {
  spec.validate();
  const Grid grid = uniform_grid(segments);
  std::vector<SkewMatrix> vals;
  vals.reserve(static_cast<std::size_t>(segments));
  for (Index i = 0; i < segments; ++i) vals.push_back(SkewMatrix::skew_part(random_gaussian(spec.n, spec.n, rng)));
  return AlgebraPath(spec, grid, std::move(vals), random_point(spec, rng), inner);
}

}  // namespace homshape
