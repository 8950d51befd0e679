#include "homshape/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace homshape {

Json matrix_to_json(const Matrix& m) {
  Json arr = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) arr.push_back(m(i, j));
  }
  return arr;
}

Matrix matrix_from_json(const Json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows * cols) {
    throw Error(Errc::schema, "expected an array of " + std::to_string(rows * cols) + " numbers");
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index k = 0; k < cols; ++k) {
      const Json& x = j[static_cast<std::size_t>(i * cols + k)];
      if (!x.is_number()) throw Error(Errc::schema, "matrix entry is not a number");
      m(i, k) = x.get<double>();
    }
  }
  return m;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(Errc::schema, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::schema, std::string("missing field '") + key + "'");
  return *it;
}

Grid grid_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::schema, "grid must be an array");
  Grid g;
  g.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw Error(Errc::schema, "grid entry is not a number");
    g.push_back(x.get<double>());
  }
  return g;
}

ManifoldPoint point_from_json(const ManifoldSpec& spec, const Json& j, const LoadOptions& options) {
  Matrix m = matrix_from_json(j, spec.n, spec.cols());
  if (options.repair) m = project_to_manifold(spec, m);
  ManifoldPoint x(spec, std::move(m), options.tolerance);
  // Accepted under a looser tolerance: snap onto the manifold.
  if (x.constraint_defect() > kManifoldTolerance) return ManifoldPoint(spec, project_to_manifold(spec, x.coords()));
  return x;
}

}  // namespace

Json spec_to_json(const ManifoldSpec& spec) {
  return Json{{"kind", std::string(to_string(spec.kind))}, {"n", spec.n}, {"p", spec.cols()}};
}

ManifoldSpec spec_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw Error(Errc::schema, "spec.kind must be a string");
  ManifoldSpec spec;
  try {
    spec.kind = parse_manifold_kind(kind.get<std::string>());
  } catch (const Error& e) {
    throw Error(Errc::schema, e.what());
  }
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) throw Error(Errc::schema, "spec.n must be an integer");
  spec.n = n.get<Index>();
  if (spec.kind == ManifoldKind::lie_group) {
    spec.p = spec.n;
  } else {
    const Json& p = field(j, "p");
    if (!p.is_number_integer()) throw Error(Errc::schema, "spec.p must be an integer");
    spec.p = p.get<Index>();
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    throw Error(Errc::schema, e.what());
  }
  return spec;
}

Json curve_to_json(const DiscreteCurve& c, const std::optional<std::string>& name) {
  Json samples = Json::array();
  for (const auto& x : c.samples()) samples.push_back(matrix_to_json(x.coords()));
  Json j{{"spec", spec_to_json(c.spec())}, {"grid", c.grid()}, {"samples", std::move(samples)}};
  if (name) j["name"] = *name;
  return j;
}

DiscreteCurve curve_from_json(const Json& j, const LoadOptions& options) {
  const ManifoldSpec spec = spec_from_json(field(j, "spec"));
  Grid grid = grid_from_json(field(j, "grid"));
  const Json& s = field(j, "samples");
  if (!s.is_array()) throw Error(Errc::schema, "samples must be an array");
  std::vector<ManifoldPoint> samples;
  samples.reserve(s.size());
  for (const auto& x : s) samples.push_back(point_from_json(spec, x, options));
  if (samples.size() == 1 && grid.size() == 1) return DiscreteCurve::point(samples.front(), grid.front());
  try {
    return DiscreteCurve(spec, std::move(grid), std::move(samples));
  } catch (const Error& e) {
    if (e.code() == Errc::domain || e.code() == Errc::dimension) throw Error(Errc::schema, e.what());
    throw;
  }
}

Json path_to_json(const AlgebraPath& q) {
  Json values = Json::array();
  for (const auto& v : q.values()) values.push_back(matrix_to_json(v.matrix()));
  Json j{{"spec", spec_to_json(q.spec())},
         {"grid", q.grid()},
         {"values", std::move(values)},
         {"base", Json{{"coords", matrix_to_json(q.base().coords())}}},
         {"inner", std::string(to_string(q.inner()))},
         {"transform", std::string(to_string(q.kind()))}};
  if (q.frame()) j["frame"] = matrix_to_json(q.frame()->matrix());
  return j;
}

AlgebraPath path_from_json(const Json& j, const LoadOptions& options) {
  const ManifoldSpec spec = spec_from_json(field(j, "spec"));
  Grid grid = grid_from_json(field(j, "grid"));
  const Json& vals = field(j, "values");
  if (!vals.is_array()) throw Error(Errc::schema, "values must be an array");
  std::vector<SkewMatrix> values;
  values.reserve(vals.size());
  for (const auto& v : vals) {
    try {
      values.emplace_back(matrix_from_json(v, spec.n, spec.n));
    } catch (const Error& e) {
      throw Error(Errc::schema, e.what());
    }
  }
  const ManifoldPoint base = point_from_json(spec, field(field(j, "base"), "coords"), options);
  InnerMode inner = InnerMode::killing_scaled;
  TransformKind kind = TransformKind::srvt;
  try {
    if (j.contains("inner")) inner = parse_inner_mode(j.at("inner").get<std::string>());
    if (j.contains("transform")) kind = parse_transform_kind(j.at("transform").get<std::string>());
  } catch (const std::exception& e) {
    throw Error(Errc::schema, e.what());
  }
  AlgebraPath q = [&] {
    try {
      return AlgebraPath(spec, std::move(grid), std::move(values), base, inner, kind);
    } catch (const Error& e) {
      throw Error(Errc::schema, e.what());
    }
  }();
  if (j.contains("frame")) {
    try {
      q.set_frame(RotationMatrix(matrix_from_json(j.at("frame"), spec.n, spec.n), 1e-9));
    } catch (const Error& e) {
      throw Error(Errc::schema, std::string("frame: ") + e.what());
    }
  }
  return q;
}

Json report_to_json(const ShapeDistanceReport& r) {
  return Json{{"d_param", r.d_param},
              {"d_shape", r.d_shape},
              {"warp", r.warp.values()},
              {"grid", r.warp.grid()},
              {"transform", std::string(to_string(r.transform))},
              {"dp_cost", r.dp_cost},
              {"identity_fallback", r.identity_fallback}};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::schema, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::schema, path.string() + ": " + e.what());
  }
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::schema, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error(Errc::schema, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(Errc::schema, "cannot move output into place: " + ec.message());
  }
}

void write_json_atomic(const std::filesystem::path& path, const Json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

DiscreteCurve load_curve(const std::filesystem::path& path, const LoadOptions& options) {
  return curve_from_json(read_json(path), options);
}

void save_curve(const std::filesystem::path& path, const DiscreteCurve& c, const std::optional<std::string>& name) {
  write_json_atomic(path, curve_to_json(c, name));
}

AlgebraPath load_path(const std::filesystem::path& path, const LoadOptions& options) {
  return path_from_json(read_json(path), options);
}

void save_path(const std::filesystem::path& path, const AlgebraPath& q) { write_json_atomic(path, path_to_json(q)); }

}  // namespace homshape
