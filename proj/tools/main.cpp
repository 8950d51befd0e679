// homshape: command-line front end for the elastic shape library.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "check.hpp"
#include "homshape/homshape.hpp"

namespace fs = std::filesystem;
using namespace homshape;

namespace {

enum Exit { kOk = 0, kInvariant = 1, kInput = 2, kNumerical = 3 };

struct Config {
  std::string input;
  std::string input2;
  std::string output;
  Index n = 0;
  Index window = 0;
  std::string transform = "srvt";
  std::string inner = "killing";
  std::vector<double> theta;
  std::uint64_t seed = 0;
  bool unscaled_cost = false;
  bool align_start = false;
  bool repair = false;
  bool align = false;
  std::string generator;
  std::string manifold = "sphere";
  Index dim = 3;
  Index p = 1;
  double length = 1.5;
  std::string name;
};

double tolerance_from_env() {
  const char* env = std::getenv("HOMSHAPE_TOL");
  if (!env || !*env) return kManifoldTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0)) {
    throw Error(Errc::configuration, "HOMSHAPE_TOL must be a positive number");
  }
  return tol;
}

LoadOptions load_options(const Config& cfg) { return LoadOptions{tolerance_from_env(), cfg.repair}; }

void emit_json(const Config& cfg, const Json& j) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_atomic(cfg.output, j);
  }
}

ShapeDistanceOptions distance_options(const Config& cfg) {
  ShapeDistanceOptions opt;
  opt.transform = parse_transform_kind(cfg.transform);
  opt.inner = parse_inner_mode(cfg.inner);
  opt.resample = cfg.n > 0 ? cfg.n : 100;
  opt.reparam.window = cfg.window;
  opt.reparam.unscaled_cost = cfg.unscaled_cost;
  opt.align_start = cfg.align_start;
  return opt;
}

int cmd_generate(const Config& cfg) {
  const Generator g = parse_generator(cfg.generator);
  GeneratorOptions opt;
  opt.seed = cfg.seed;
  opt.length = cfg.length;
  const ManifoldKind kind = parse_manifold_kind(cfg.manifold);
  switch (kind) {
    case ManifoldKind::sphere: opt.spec = ManifoldSpec::sphere(); break;
    case ManifoldKind::stiefel: opt.spec = ManifoldSpec::stiefel(cfg.dim, cfg.p); break;
    case ManifoldKind::grassmann: opt.spec = ManifoldSpec::grassmann(cfg.dim, cfg.p); break;
    case ManifoldKind::lie_group: opt.spec = ManifoldSpec::lie_group(cfg.dim); break;
  }
  const DiscreteCurve c = generate(g, cfg.n > 0 ? cfg.n : 100, opt);
  emit_json(cfg, curve_to_json(c, cfg.name.empty() ? std::string(to_string(g)) : cfg.name));
  return kOk;
}

int cmd_transform(const Config& cfg) {
  const DiscreteCurve c = load_curve(cfg.input, load_options(cfg));
  const AlgebraPath q = transform(c, parse_transform_kind(cfg.transform), parse_inner_mode(cfg.inner));
  emit_json(cfg, path_to_json(q));
  return kOk;
}

int cmd_invert(const Config& cfg) {
  const AlgebraPath q = load_path(cfg.input, load_options(cfg));
  emit_json(cfg, curve_to_json(inverse_transform(q)));
  return kOk;
}

int cmd_distance(const Config& cfg, bool write_aligned) {
  const LoadOptions lo = load_options(cfg);
  const DiscreteCurve c1 = load_curve(cfg.input, lo);
  const DiscreteCurve c2 = load_curve(cfg.input2, lo);
  const ShapeDistanceReport r = shape_distance(c1, c2, distance_options(cfg));
  const Json report = report_to_json(r);
  if (write_aligned) {
    std::cout << report.dump(2) << "\n";
    if (!cfg.output.empty() && cfg.output != "-") save_curve(cfg.output, r.aligned, std::string("aligned"));
  } else {
    emit_json(cfg, report);
  }
  return kOk;
}

std::string csv_header(const ManifoldSpec& spec) {
  if (spec.kind == ManifoldKind::sphere) return "theta,t,x,y,z";
  std::string h = "theta,t";
  for (Index i = 0; i < spec.n; ++i) {
    for (Index j = 0; j < spec.cols(); ++j) h += ",m" + std::to_string(i) + "_" + std::to_string(j);
  }
  return h;
}

int cmd_geodesic(const Config& cfg) {
  const LoadOptions lo = load_options(cfg);
  DiscreteCurve c1 = load_curve(cfg.input, lo);
  DiscreteCurve c2 = load_curve(cfg.input2, lo);
  const TransformKind kind = parse_transform_kind(cfg.transform);
  const InnerMode inner = parse_inner_mode(cfg.inner);
  if (cfg.align) {
    // Register c2 to c1 first; both curves then live on the common grid.
    const ShapeDistanceReport r = shape_distance(c1, c2, distance_options(cfg));
    c1 = resample(c1, distance_options(cfg).resample);
    c2 = r.aligned;
  } else if (cfg.n > 0) {
    c1 = resample(c1, cfg.n);
    c2 = resample(c2, cfg.n);
  }
  std::vector<double> thetas = cfg.theta;
  if (thetas.empty()) thetas = {0.0, 0.25, 0.5, 0.75, 1.0};

  const std::string prefix = cfg.output.empty() ? std::string("geodesic") : cfg.output;
  std::ostringstream csv;
  csv.precision(17);
  csv << csv_header(c1.spec()) << "\n";
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    const double th = thetas[k];
    if (!(th >= 0.0 && th <= 1.0)) throw Error(Errc::configuration, "theta must lie in [0, 1]");
    const DiscreteCurve c = geodesic_interpolate(c1, c2, th, kind, inner);
    save_curve(prefix + "_" + std::to_string(k) + ".json", c, "theta=" + std::to_string(th));
    for (std::size_t i = 0; i < c.size(); ++i) {
      csv << th << "," << c.t(i);
      const Matrix& m = c.sample(i).coords();
      for (Index r = 0; r < m.rows(); ++r) {
        for (Index s = 0; s < m.cols(); ++s) csv << "," << m(r, s);
      }
      csv << "\n";
    }
  }
  write_text_atomic(prefix + ".csv", csv.str());
  std::cout << "wrote " << thetas.size() << " curves to " << prefix << "_<k>.json and " << prefix << ".csv\n";
  return kOk;
}

int exit_code(const Error& e) {
  if (is_numerical(e.code())) return kNumerical;
  return kInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elastic shape analysis of curves on homogeneous manifolds"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_io = [&cfg](CLI::App* sub, bool two_inputs) {
    sub->add_option("-i,--input", cfg.input, "input JSON file")->required();
    if (two_inputs) sub->add_option("--input2", cfg.input2, "second input JSON file")->required();
  };
  const auto add_transform = [&cfg](CLI::App* sub) {
    sub->add_option("--transform", cfg.transform, "srvt or reductive")
        ->check(CLI::IsMember({"srvt", "reductive"}));
    sub->add_option("--inner", cfg.inner, "inner product on so(n)")
        ->check(CLI::IsMember({"killing", "killing_scaled", "frobenius"}));
  };
  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_flag("--repair-tangents", cfg.repair, "project loaded samples onto the manifold");
  };
  const auto add_dp = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "resample size N")->check(CLI::Range(Index{2}, Index{100000}));
    sub->add_option("--window", cfg.window, "largest index advance per arc (0 = N)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--paper-literal-cost", cfg.unscaled_cost, "omit the sqrt(slope) factor in arc costs");
    sub->add_flag("--align-start", cfg.align_start, "rotate the second curve onto the first start point");
  };

  CLI::App* gen = app.add_subcommand("generate", "sample a named curve");
  gen->add_option("generator,--kind", cfg.generator, "fig1_c1, fig1_c2, fig2_c1, fig2_c2, great_circle, random_walk")
      ->required();
  gen->add_option("--n", cfg.n, "number of segments")->check(CLI::Range(Index{1}, Index{1000000}));
  gen->add_option("--manifold", cfg.manifold, "manifold for random_walk")
      ->check(CLI::IsMember({"sphere", "stiefel", "grassmann", "lie_group"}));
  gen->add_option("--dim", cfg.dim, "ambient dimension n");
  gen->add_option("--p", cfg.p, "frame width p");
  gen->add_option("--length", cfg.length, "random walk length")->check(CLI::PositiveNumber);
  gen->add_option("--name", cfg.name, "name tag stored in the file");
  gen->add_option("-o,--output", cfg.output, "output file (default stdout)");
  add_common(gen);

  CLI::App* tr = app.add_subcommand("transform", "curve -> transformed path");
  add_io(tr, false);
  tr->add_option("-o,--output", cfg.output, "output file (default stdout)");
  add_transform(tr);
  add_common(tr);

  CLI::App* inv = app.add_subcommand("invert", "transformed path -> curve");
  add_io(inv, false);
  inv->add_option("-o,--output", cfg.output, "output file (default stdout)");
  add_common(inv);

  CLI::App* dist = app.add_subcommand("distance", "parametrised and shape distance of two curves");
  add_io(dist, true);
  dist->add_option("-o,--output", cfg.output, "report file (default stdout)");
  add_transform(dist);
  add_dp(dist);
  add_common(dist);

  CLI::App* rep = app.add_subcommand("reparam", "register the second curve to the first");
  add_io(rep, true);
  rep->add_option("-o,--output", cfg.output, "file for the warped second curve");
  add_transform(rep);
  add_dp(rep);
  add_common(rep);

  CLI::App* geo = app.add_subcommand("geodesic", "straight-line interpolation in transform space");
  add_io(geo, true);
  geo->add_option("-o,--output", cfg.output, "output prefix");
  geo->add_option("--theta", cfg.theta, "interpolation parameter (repeatable)");
  geo->add_flag("--align", cfg.align, "register the second curve to the first before interpolating");
  add_transform(geo);
  add_dp(geo);
  add_common(geo);

  CLI::App* chk = app.add_subcommand("check", "run the invariant battery on generated data");
  chk->add_option("--seed", cfg.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*gen) return cmd_generate(cfg);
    if (*tr) return cmd_transform(cfg);
    if (*inv) return cmd_invert(cfg);
    if (*dist) return cmd_distance(cfg, false);
    if (*rep) return cmd_distance(cfg, true);
    if (*geo) return cmd_geodesic(cfg);
    if (*chk) {
      const int failures = homshape::tool::run_checks(cfg.seed, std::cout);
      return failures == 0 ? kOk : kInvariant;
    }
  } catch (const Error& e) {
    std::cerr << "homshape: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "homshape: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
