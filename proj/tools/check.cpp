#include "check.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "homshape/homshape.hpp"

namespace homshape::tool {

namespace {

struct Check {
  std::string name;
  double limit;
  std::function<double(Rng&)> measure;
};

const std::vector<ManifoldSpec>& all_specs() {
  static const std::vector<ManifoldSpec> specs{ManifoldSpec::sphere(), ManifoldSpec::stiefel(4, 2),
                                               ManifoldSpec::grassmann(4, 2), ManifoldSpec::lie_group(3)};
  return specs;
}

double rodrigues_gap(Rng& rng) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const SkewMatrix x = random_skew(3, rng, std::sqrt(2.0) * std::numbers::pi * std::uniform_real_distribution<>(0, 1)(rng));
    worst = std::max(worst, (rodrigues_exp(x).matrix() - expm(x).matrix()).norm());
  }
  return worst;
}

double equivariance(Rng& rng) {
  double worst = 0.0;
  for (const auto& spec : {ManifoldSpec::sphere(), ManifoldSpec::grassmann(4, 2)}) {
    for (int k = 0; k < 50; ++k) {
      const ManifoldPoint x = random_point(spec, rng);
      const TangentVector v(x, random_tangent(x, rng));
      worst = std::max(worst, alpha_equivariance_defect(random_rotation(spec.n, rng), x, v));
    }
  }
  return worst;
}

double right_inverse(Rng& rng) {
  double worst = 0.0;
  for (const auto& spec : all_specs()) {
    for (int k = 0; k < 20; ++k) {
      const ManifoldPoint x = random_point(spec, rng);
      const TangentVector v(x, random_tangent(x, rng));
      worst = std::max(worst, (alpha(v).matrix() * x.coords() - v.vec()).norm());
    }
  }
  return worst;
}

double srvt_round_trip(Rng& rng) {
  double worst = 0.0;
  for (const auto& spec : all_specs()) {
    for (Index n : {1, 10}) {
      const DiscreteCurve c = random_walk(spec, n, rng);
      worst = std::max(worst, max_sample_deviation(srvt_inverse(srvt(c)), c));
    }
  }
  return worst;
}

double reductive_round_trip(Rng& rng) {
  double worst = 0.0;
  for (const auto& spec : all_specs()) {
    for (Index n : {1, 10}) {
      const DiscreteCurve c = random_walk(spec, n, rng);
      worst = std::max(worst, max_sample_deviation(reductive_srvt_inverse(reductive_srvt(c)), c));
    }
  }
  return worst;
}

double involution(Rng& rng) {
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const AlgebraPath q = random_path(ManifoldSpec::stiefel(4, 2), 20, rng);
    const RotationMatrix g0 = random_rotation(4, rng);
    worst = std::max(worst, max_value_deviation(psi(psi(q)), q));
    worst = std::max(worst, max_value_deviation(psi_g0(psi_g0(q, g0), g0.inverse()), q));
  }
  return worst;
}

double reductive_image(Rng& rng) {
  double worst = 0.0;
  for (const auto& spec : all_specs()) {
    const DiscreteCurve c = random_walk(spec, 20, rng);
    const AlgebraPath q = reductive_srvt(c);
    for (const auto& v : q.values()) {
      worst = std::max(worst, reductive_split(spec, v).h_part.matrix().norm());
    }
  }
  return worst;
}

double dp_oracle(Rng& rng) {
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const ManifoldSpec spec = ManifoldSpec::sphere();
    const AlgebraPath q1 = random_path(spec, 4, rng);
    const AlgebraPath q2g(spec, q1.grid(), random_path(spec, 4, rng).values(), q1.base(), q1.inner());
    const ReparamResult dp = reparametrise(q1, q2g);
    const BruteForceResult bf = brute_force_reparam(q1, q2g);
    if (dp.path != bf.path) return 1.0;
    worst = std::max(worst, std::abs(dp.cost - bf.cost));
  }
  return worst;
}

double self_distance(Rng&) {
  const DiscreteCurve c = generate(Generator::fig2_c1, 30);
  ShapeDistanceOptions opt;
  opt.resample = 0;
  const ShapeDistanceReport r = shape_distance(c, c, opt);
  return std::max(r.d_param, r.d_shape);
}

double frame_drift(Rng& rng) {
  double worst = 0.0;
  for (const auto& spec : {ManifoldSpec::sphere(), ManifoldSpec::stiefel(4, 2)}) {
    const DiscreteCurve c = random_walk(spec, 200, rng, 20.0);
    const FrameLift lift = lift_frames(c);
    worst = std::max(worst, lift.frames.back().orthogonality_defect());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Matrix cols = lift.frames[i].matrix().leftCols(spec.cols());
      worst = std::max(worst, point_distance(ManifoldPoint::unchecked(spec, cols), c.sample(i)));
    }
  }
  return worst;
}

double emitted_invariants(Rng& rng) {
  double worst = 0.0;
  for (const auto& spec : all_specs()) {
    const DiscreteCurve c = random_walk(spec, 50, rng);
    worst = std::max(worst, srvt_inverse(srvt(c)).max_constraint_defect());
    worst = std::max(worst, resample(c, 73).max_constraint_defect());
  }
  return worst;
}

}  // namespace

int run_checks(std::uint64_t seed, std::ostream& out) {
  const std::vector<Check> checks{
      {"rodrigues_matches_expm", 1e-12, rodrigues_gap},
      {"alpha_right_inverse", 1e-12, right_inverse},
      {"alpha_equivariance", 1e-12, equivariance},
      {"srvt_round_trip", 1e-9, srvt_round_trip},
      {"reductive_round_trip", 1e-9, reductive_round_trip},
      {"psi_involution", 1e-10, involution},
      {"reductive_image", 1e-10, reductive_image},
      {"dp_matches_brute_force", 0.0, dp_oracle},
      {"self_distance_zero", 1e-12, self_distance},
      {"frame_drift", 1e-10, frame_drift},
      {"emitted_curve_invariants", 1e-10, emitted_invariants},
  };
  int failures = 0;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    Rng rng(seed + 7919 * k);
    const Check& c = checks[k];
    double value = 0.0;
    bool ok = false;
    std::string note;
    try {
      value = c.measure(rng);
      ok = value <= c.limit;
    } catch (const Error& e) {
      note = std::string(" error: ") + e.what();
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %-26s %.3e (limit %.1e)", ok ? "ok" : "FAIL", c.name.c_str(), value,
                  c.limit);
    out << line << note << "\n";
    if (!ok) ++failures;
  }
  return failures;
}

}  // namespace homshape::tool
