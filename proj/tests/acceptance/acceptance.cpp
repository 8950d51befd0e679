// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "homshape/homshape.hpp"

using namespace homshape;
using std::numbers::pi;

namespace {

int failures = 0;
double emitted_defect = 0.0;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("%s %s %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

const DiscreteCurve& emitted(const DiscreteCurve& c) {
  emitted_defect = std::max(emitted_defect, c.max_constraint_defect());
  return c;
}

std::vector<ManifoldSpec> specs() {
  return {ManifoldSpec::sphere(), ManifoldSpec::stiefel(4, 2), ManifoldSpec::grassmann(4, 2),
          ManifoldSpec::lie_group(3)};
}

// Runs one criterion, turning an escaped library error into a FAIL line.
void criterion(const char* id, const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("error: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "  %s took %.1f s\n", id, s);
}

void ac1() {
  Rng rng(101);
  double worst_srvt = 0.0;
  double worst_red = 0.0;
  for (const auto& spec : specs()) {
    for (Index n : {1, 10, 100}) {
      for (int k = 0; k < 20; ++k) {
        const DiscreteCurve c = random_walk(spec, n, rng, 3.0);
        worst_srvt = std::max(worst_srvt, max_sample_deviation(emitted(srvt_inverse(srvt(c))), c));
        worst_red =
            std::max(worst_red, max_sample_deviation(emitted(reductive_srvt_inverse(reductive_srvt(c))), c));
      }
    }
  }
  report("AC1", worst_srvt <= 1e-9 && worst_red <= 1e-9,
         fmt("round trip: srvt %.2e, reductive %.2e (limit 1e-9; 4 kinds x N in {1,10,100} x 20)", worst_srvt,
             worst_red));
}

void ac2() {
  Rng rng(202);
  double worst_psi = 0.0;
  double worst_g0 = 0.0;
  const auto kinds = specs();
  for (int k = 0; k < 50; ++k) {
    const ManifoldSpec& spec = kinds[static_cast<std::size_t>(k) % kinds.size()];
    const AlgebraPath q = random_path(spec, 20, rng);
    const RotationMatrix g0 = random_rotation(spec.n, rng);
    worst_psi = std::max(worst_psi, max_value_deviation(psi(psi(q)), q));
    worst_g0 = std::max(worst_g0, max_value_deviation(psi_g0(psi_g0(q, g0), g0.inverse()), q));
  }
  report("AC2", worst_psi <= 1e-10 && worst_g0 <= 1e-10,
         fmt("involution: psi %.2e, psi_g0 %.2e (limit 1e-10; 50 paths, N=20)", worst_psi, worst_g0));
}

void ac3() {
  Rng rng(303);
  double worst_h = 0.0;
  double worst_omega = 0.0;
  std::size_t count = 0;
  for (const auto& spec : specs()) {
    for (int k = 0; k < 20; ++k) {
      const AlgebraPath q = reductive_srvt(random_walk(spec, 50, rng, 3.0));
      for (const auto& v : q.values()) {
        ++count;
        worst_h = std::max(worst_h, reductive_split(spec, v).h_part.matrix().norm());
        if (spec.kind == ManifoldKind::grassmann) {
          worst_omega = std::max(worst_omega, v.matrix().topLeftCorner(spec.p, spec.p).norm());
        }
      }
    }
  }
  report("AC3", worst_h <= 1e-10 && worst_omega <= 1e-12,
         fmt("reductive image: max |h| %.2e (limit 1e-10), grassmann max |Omega| %.2e (limit 1e-12) over %.0f values",
             worst_h, worst_omega, static_cast<double>(count)));
}

void ac4() {
  Rng rng(404);
  int matches = 0;
  for (int k = 0; k < 50; ++k) {
    const Index n = 1 + k % 5;
    const ManifoldSpec spec = k % 2 == 0 ? ManifoldSpec::sphere() : ManifoldSpec::stiefel(4, 2);
    const AlgebraPath q1 = random_path(spec, n, rng);
    const AlgebraPath q2 = random_path(spec, n, rng);
    const ReparamResult dp = reparametrise(q1, q2, {.window = n});
    const BruteForceResult bf = brute_force_reparam(q1, q2);
    if (dp.cost == bf.cost && dp.path == bf.path) ++matches;
  }
  report("AC4", matches == 50, fmt("dp == brute force (same path, same cost) on %.0f/50 instances, N <= 5", matches));
}

void ac5() {
  const std::vector<Index> ns{50, 100, 200};
  std::vector<double> diff;
  double d200 = 0.0;
  for (Index n : ns) {
    const double d = l2_distance(srvt(sample_sphere_curve(fig2_c1, n)), srvt(sample_sphere_curve(fig2_c2, n)));
    const double dw = l2_distance(srvt(sample_sphere_curve(fig2_c1, n, sine_warp)),
                                  srvt(sample_sphere_curve(fig2_c2, n, sine_warp)));
    diff.push_back(std::abs(dw - d));
    d200 = d;
  }
  // Least-squares slope of log(diff) against log(N).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(static_cast<double>(ns[i]));
    const double y = std::log(diff[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(ns.size());
  const double order = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
  const bool decreasing = diff[1] < diff[0] && diff[2] < diff[1];
  const bool ok = decreasing && order >= 0.9 && diff[2] <= 0.02 * d200;
  report("AC5", ok,
         fmt("invariance gap %.2e / %.2e / %.2e at N=50/100/200, observed order %.2f (limit >= 0.9)", diff[0], diff[1],
             diff[2], order) +
             fmt(", gap/d_param at N=200 %.2e (limit 0.02)", diff[2] / d200));
}

double inverse_warp(double t) {
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (sine_warp(mid) < t ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void ac6() {
  const Index n = 100;
  const double limit = 5.0 / static_cast<double>(n);
  const DiscreteCurve c1 = sample_sphere_curve(fig2_c1, n);
  ShapeDistanceOptions opt;
  opt.resample = 0;

  // c2 = c1 o phi. The warp s registers c2 onto c1 (c2 o s ~ c1), so it
  // recovers phi^{-1}.
  const DiscreteCurve c2 = sample_sphere_curve(fig2_c1, n, sine_warp);
  const ShapeDistanceReport r = shape_distance(c1, c2, opt);
  emitted(r.aligned);
  double err_inv = 0.0;
  double err_literal = 0.0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    err_inv = std::max(err_inv, std::abs(r.warp[i] - inverse_warp(c1.t(i))));
    err_literal = std::max(err_literal, std::abs(r.warp[i] - sine_warp(c1.t(i))));
  }
  const double ratio = r.d_shape / r.d_param;

  // c2 = c1 o phi^{-1}: now s itself should track phi.
  const DiscreteCurve c3 = sample_sphere_curve(fig2_c1, n, inverse_warp);
  const ShapeDistanceReport r3 = shape_distance(c1, c3, opt);
  emitted(r3.aligned);
  double err_phi = 0.0;
  for (std::size_t i = 0; i < c1.size(); ++i) err_phi = std::max(err_phi, std::abs(r3.warp[i] - sine_warp(c1.t(i))));
  const double ratio3 = r3.d_shape / r3.d_param;

  // Graded as stated: s against phi for c2 = c1 o phi. With the warp defined by
  // c2'(t_i) = c2(s_i) this pairing recovers phi^{-1}, so the warp bound is
  // expected to fail; both pairings are printed.
  const bool ok = ratio <= 0.2 && err_literal <= limit;
  report("AC6", ok,
         fmt("c2=c1.phi: d_shape/d_param %.4f (limit 0.2), max|s-phi| %.4f (limit %.2f)", ratio, err_literal, limit) +
             fmt("; same pair max|s-phi^-1| %.4f; c2=c1.phi^-1: ratio %.4f, max|s-phi| %.4f", err_inv, ratio3,
                 err_phi));
}

void ac7() {
  Rng rng(707);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const DiscreteCurve c = random_walk(ManifoldSpec::sphere(), 100, rng, 3.0);
    TangentField v;
    for (const auto& x : c.samples()) v.push_back(random_tangent(x, rng, 0.1));
    const double fd = pullback_metric(c, v, v, TransformKind::srvt, InnerMode::frobenius);
    const double cf = pullback_metric_sphere(c, v, v);
    worst = std::max(worst, std::abs(fd - cf) / std::abs(cf));
  }
  report("AC7", worst <= 1e-4, fmt("pullback metric FD vs closed form: max rel err %.2e (limit 1e-4; 10 curves, N=100)", worst));
}

void ac8() {
  const Index n = 100;
  const DiscreteCurve c1 = generate(Generator::fig2_c1, n);
  const DiscreteCurve raw2 = generate(Generator::fig2_c2, n);
  const std::vector<double> thetas{0.25, 0.5, 0.75};
  double ends = 0.0;
  double line = 0.0;
  double red_curve = 0.0;
  double srvt_curve = 0.0;
  for (TransformKind kind : {TransformKind::srvt, TransformKind::reductive}) {
    ShapeDistanceOptions opt;
    opt.transform = kind;
    opt.resample = n;
    const DiscreteCurve c2 = emitted(shape_distance(c1, raw2, opt).aligned);
    ends = std::max(ends, max_sample_deviation(emitted(geodesic_interpolate(c1, c2, 0.0, kind)), c1));
    ends = std::max(ends, max_sample_deviation(emitted(geodesic_interpolate(c1, c2, 1.0, kind)), c2));
    const auto g0 = kind == TransformKind::reductive ? std::optional(lift_to_group(c1.sample(0))) : std::nullopt;
    const AlgebraPath q1 = transform(c1, kind, InnerMode::killing_scaled, g0);
    const AlgebraPath q2 = transform(c2, kind, InnerMode::killing_scaled, g0);
    const double total = l2_distance(q1, q2);
    for (double th : thetas) {
      const AlgebraPath qt = interpolate_paths(q1, q2, th);
      line = std::max(line, std::abs(l2_distance(qt, q1) - th * total));
      const DiscreteCurve c = emitted(inverse_transform(qt));
      const double gap = std::abs(l2_distance(transform(c, kind, InnerMode::killing_scaled, g0), q1) - th * total);
      (kind == TransformKind::reductive ? red_curve : srvt_curve) =
          std::max(kind == TransformKind::reductive ? red_curve : srvt_curve, gap);
    }
  }
  // Graded on the SRVT pipeline as stated. Its image on the sphere is a
  // curved submanifold, so this is expected to fail; the straight line and
  // the reductive pipeline are printed for comparison.
  report("AC8", ends <= 1e-9 && srvt_curve <= 1e-10,
         fmt("geodesic endpoints %.2e (limit 1e-9), srvt re-transform flatness %.2e (limit 1e-10)", ends,
             srvt_curve) +
             fmt("; straight line %.2e, reductive re-transform %.2e", line, red_curve));
}

void ac9() {
  Rng rng(909);
  double worst_s = 0.0;
  double worst_g = 0.0;
  for (int k = 0; k < 100; ++k) {
    for (const auto& spec : {ManifoldSpec::sphere(), ManifoldSpec::grassmann(4, 2)}) {
      const ManifoldPoint x = random_point(spec, rng);
      const TangentVector v(x, random_tangent(x, rng));
      const double d = alpha_equivariance_defect(random_rotation(spec.n, rng), x, v);
      (spec.kind == ManifoldKind::sphere ? worst_s : worst_g) = std::max(
          spec.kind == ManifoldKind::sphere ? worst_s : worst_g, d);
    }
  }
  report("AC9", worst_s <= 1e-12 && worst_g <= 1e-12,
         fmt("equivariance defect: sphere %.2e, grassmann %.2e (limit 1e-12; 100 triples each)", worst_s, worst_g));
}

void ac10() {
  Rng rng(1010);
  double drift = 0.0;
  for (const auto& spec : specs()) {
    const DiscreteCurve c = random_walk(spec, 200, rng, 10.0);
    drift = std::max(drift, lift_frames(c).frames.back().orthogonality_defect());
  }
  std::uniform_real_distribution<> angle(0.0, pi);
  double rod = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Vector3 axis = Vector3(random_gaussian(3, 1, rng)).normalized();
    const SkewMatrix x = hat(angle(rng) * axis);
    rod = std::max(rod, (rodrigues_exp(x).matrix() - expm(x).matrix()).norm());
  }
  for (Generator g : {Generator::fig1_c1, Generator::fig1_c2, Generator::fig2_c1, Generator::fig2_c2,
                      Generator::great_circle}) {
    emitted(generate(g, 100));
  }
  for (const auto& spec : specs()) {
    GeneratorOptions o;
    o.spec = spec;
    emitted(generate(Generator::random_walk, 100, o));
  }
  report("AC10", drift <= 1e-10 && emitted_defect <= 1e-10 && rod <= 1e-12,
         fmt("frame drift after 200 steps %.2e (limit 1e-10), emitted curve defect %.2e (limit 1e-10), "
             "rodrigues vs expm %.2e (limit 1e-12)",
             drift, emitted_defect, rod));
}

}  // namespace

int main() {
  criterion("AC1", ac1);
  criterion("AC2", ac2);
  criterion("AC3", ac3);
  criterion("AC4", ac4);
  criterion("AC5", ac5);
  criterion("AC6", ac6);
  criterion("AC7", ac7);
  criterion("AC8", ac8);
  criterion("AC9", ac9);
  criterion("AC10", ac10);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
