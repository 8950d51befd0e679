#pragma once

// Named test curves, random points, tangents and paths.

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "homshape/paths.hpp"

namespace homshape {

using Rng = std::mt19937_64;

Matrix rotation_x(double angle);
Matrix rotation_y(double angle);
Matrix rotation_z(double angle);

/// Samples f on `grid`; f must return coordinates on `spec` (checked).
DiscreteCurve sample_curve(const ManifoldSpec& spec, const Grid& grid, const std::function<Matrix(double)>& f);

/// R_x(pi t^3) R_y(pi t^3) R_y(pi t^3 / 2) e_1
Vector3 fig1_c1(double t);
/// R_z(3 pi t / 4) R_x(pi t) e_1
Vector3 fig1_c2(double t);
/// R_x(2 pi t) R_y(2 pi t) R_z(pi t) (0, 1, 1) / sqrt(2)
Vector3 fig2_c1(double t);
/// R_z(2 pi t) R_x(2 pi t) R_y(pi t / 2) (0, 1, 1) / sqrt(2)
Vector3 fig2_c2(double t);
/// (cos(pi t / 2), sin(pi t / 2), 0)
Vector3 great_circle(double t);

/// phi(t) = t + 0.2 t (1 - t) sin(2 pi t), a smooth increasing warp of [0, 1].
double sine_warp(double t);

enum class Generator { fig1_c1, fig1_c2, fig2_c1, fig2_c2, great_circle, random_walk };

Generator parse_generator(std::string_view name);
std::string_view to_string(Generator g) noexcept;

struct GeneratorOptions {
  /// Manifold for random_walk; the named sphere curves ignore it.
  ManifoldSpec spec = ManifoldSpec::sphere();
  std::uint64_t seed = 0;
  /// Total transported length of a random walk.
  double length = 1.5;
};

/// The curve sampled on the uniform grid of `segments` steps of [0, 1].
DiscreteCurve generate(Generator g, Index segments, const GeneratorOptions& options = {});

/// Sphere curve t -> f(phi(t)) on the uniform grid, for warp experiments.
DiscreteCurve sample_sphere_curve(const std::function<Vector3(double)>& f, Index segments,
                                  const std::function<double(double)>& warp = nullptr);

// Random draws. All take the generator by reference so callers control
// seeding.
double random_normal(Rng& rng);
Matrix random_gaussian(Index rows, Index cols, Rng& rng);
SkewMatrix random_skew(Index n, Rng& rng, double norm = 1.0);
RotationMatrix random_rotation(Index n, Rng& rng);
ManifoldPoint random_point(const ManifoldSpec& spec, Rng& rng);
/// Gaussian tangent at x, projected.
Matrix random_tangent(const ManifoldPoint& x, Rng& rng, double norm = 1.0);

/// A random walk with smoothly drifting direction and fixed step length
/// options.length / segments, starting at a random point.
DiscreteCurve random_walk(const ManifoldSpec& spec, Index segments, Rng& rng, double length = 1.5);

/// Random path with Gaussian values on the uniform grid.
AlgebraPath random_path(const ManifoldSpec& spec, Index segments, Rng& rng,
                        InnerMode inner = InnerMode::killing_scaled);

}  // namespace homshape
