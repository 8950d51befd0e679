#include <cmath>
#include <numbers>

#include "test_util.hpp"

using namespace homshape;
using namespace homshape::testing;
using std::numbers::pi;

TEST(Generators, GreatCircleFourSegments) {
  const DiscreteCurve c = generate(Generator::great_circle, 4);
  ASSERT_EQ(c.size(), 5u);
  for (const auto& s : c.samples()) {
    EXPECT_NEAR(s.coords().norm(), 1.0, 1e-15);
    EXPECT_EQ(s.coords()(2, 0), 0.0);
  }
  EXPECT_LE((c.samples().back().coords() - col3(0, 1, 0)).norm(), 1e-15);
}

TEST(Generators, NamedCurvesAtZero) {
  EXPECT_LE((fig2_c1(0.0) - Vector3(0, 1, 1) / std::sqrt(2.0)).norm(), 1e-15);
  EXPECT_LE((fig2_c2(0.0) - Vector3(0, 1, 1) / std::sqrt(2.0)).norm(), 1e-15);
  EXPECT_LE((fig1_c2(0.0) - Vector3(1, 0, 0)).norm(), 1e-15);
  EXPECT_LE((fig1_c1(0.0) - Vector3(1, 0, 0)).norm(), 1e-15);
}

TEST(Generators, NamedCurveFormulas) {
  const double t = 0.37;
  const Vector3 e1(1, 0, 0);
  const Vector3 v = Vector3(0, 1, 1) / std::sqrt(2.0);
  const double a = pi * t * t * t;
  EXPECT_LE((fig1_c1(t) - rotation_x(a) * rotation_y(a) * rotation_y(a / 2) * e1).norm(), 1e-15);
  EXPECT_LE((fig1_c2(t) - rotation_z(3 * pi * t / 4) * rotation_x(pi * t) * e1).norm(), 1e-15);
  EXPECT_LE((fig2_c1(t) - rotation_x(2 * pi * t) * rotation_y(2 * pi * t) * rotation_z(pi * t) * v).norm(), 1e-15);
  EXPECT_LE((fig2_c2(t) - rotation_z(2 * pi * t) * rotation_x(2 * pi * t) * rotation_y(pi * t / 2) * v).norm(),
            1e-15);
}

TEST(Generators, AxisRotations) {
  EXPECT_LE((rotation_z(pi / 2) * Vector3(1, 0, 0) - Vector3(0, 1, 0)).norm(), 1e-15);
  EXPECT_LE((rotation_x(pi / 2) * Vector3(0, 1, 0) - Vector3(0, 0, 1)).norm(), 1e-15);
  EXPECT_LE((rotation_y(pi / 2) * Vector3(0, 0, 1) - Vector3(1, 0, 0)).norm(), 1e-15);
}

TEST(Generators, SineWarpIsIncreasing) {
  EXPECT_EQ(sine_warp(0.0), 0.0);
  EXPECT_EQ(sine_warp(1.0), 1.0);
  double prev = 0.0;
  for (int k = 1; k <= 1000; ++k) {
    const double x = sine_warp(k / 1000.0);
    EXPECT_GT(x, prev);
    prev = x;
  }
}

TEST(Generators, WarpedSampling) {
  const DiscreteCurve c = sample_sphere_curve(great_circle, 10, sine_warp);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_LE((c.sample(i).coords() - Matrix(great_circle(sine_warp(c.t(i))))).norm(), 1e-15);
  }
}

TEST(Generators, Names) {
  for (Generator g : {Generator::fig1_c1, Generator::fig1_c2, Generator::fig2_c1, Generator::fig2_c2,
                      Generator::great_circle, Generator::random_walk}) {
    EXPECT_EQ(parse_generator(to_string(g)), g);
  }
  expect_error(Errc::configuration, [] { parse_generator("spiral"); });
}

TEST(Generators, RandomDrawsSatisfyInvariants) {
  Rng rng(1);
  for (const auto& spec : all_specs()) {
    for (int k = 0; k < 20; ++k) {
      const ManifoldPoint x = random_point(spec, rng);
      EXPECT_LE(x.constraint_defect(), 1e-12);
      EXPECT_LE(tangent_defect(x, random_tangent(x, rng)), 1e-12);
      EXPECT_NEAR(random_tangent(x, rng, 0.3).norm(), 0.3, 1e-12);
    }
    EXPECT_LE(random_rotation(spec.n, rng).orthogonality_defect(), 1e-12);
  }
  EXPECT_NEAR(random_skew(5, rng, 2.0).matrix().norm(), 2.0, 1e-12);
}

TEST(Generators, RandomWalkIsSeededAndValid) {
  for (const auto& spec : all_specs()) {
    GeneratorOptions o;
    o.spec = spec;
    o.seed = 42;
    const DiscreteCurve a = generate(Generator::random_walk, 30, o);
    const DiscreteCurve b = generate(Generator::random_walk, 30, o);
    EXPECT_EQ(max_sample_deviation(a, b), 0.0);
    EXPECT_LE(a.max_constraint_defect(), 1e-10);
    EXPECT_NO_THROW(fit_velocities(a));
  }
}

TEST(Generators, RandomPathShape) {
  Rng rng(2);
  const AlgebraPath q = random_path(ManifoldSpec::stiefel(5, 2), 7, rng);
  EXPECT_EQ(q.size(), 7u);
  EXPECT_EQ(q.value(0).dim(), 5);
  for (const auto& v : q.values()) EXPECT_GT(algebra_norm(v), kZeroValueTolerance);
}
