#include <filesystem>
#include <fstream>

#include "test_util.hpp"

using namespace homshape;
using namespace homshape::testing;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "homshape_io_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Json, MatrixRowMajor) {
  Matrix m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  const Json j = matrix_to_json(m);
  EXPECT_EQ(j, Json::parse("[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]"));
  EXPECT_EQ(matrix_from_json(j, 2, 3), m);
  expect_error(Errc::schema, [&] { matrix_from_json(j, 3, 3); });
  expect_error(Errc::schema, [] { matrix_from_json(Json::parse("[1, \"x\"]"), 1, 2); });
}

TEST(Json, SpecRoundTrip) {
  for (const auto& spec : all_specs()) EXPECT_EQ(spec_from_json(spec_to_json(spec)), spec);
  expect_error(Errc::schema, [] { spec_from_json(Json::parse(R"({"kind": "torus", "n": 3, "p": 1})")); });
  expect_error(Errc::schema, [] { spec_from_json(Json::parse(R"({"kind": "sphere", "n": 4, "p": 1})")); });
  expect_error(Errc::schema, [] { spec_from_json(Json::parse(R"({"kind": "sphere"})")); });
}

TEST(Json, CurveRoundTripIsBitExact) {
  Rng rng(1);
  for (const auto& spec : all_specs()) {
    const DiscreteCurve c = random_walk(spec, 12, rng);
    const DiscreteCurve back = curve_from_json(Json::parse(curve_to_json(c, "walk").dump()));
    ASSERT_EQ(back.size(), c.size());
    EXPECT_EQ(back.grid(), c.grid());
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(back.sample(i).coords(), c.sample(i).coords());
  }
}

TEST(Json, CurveSchemaErrors) {
  expect_error(Errc::schema, [] { curve_from_json(Json::parse("[]")); });
  expect_error(Errc::schema, [] {
    curve_from_json(Json::parse(R"({"spec": {"kind": "sphere", "n": 3, "p": 1}, "grid": [0, 1],
                                   "samples": [[1, 0, 0]]})"));
  });
  expect_error(Errc::schema, [] {
    curve_from_json(Json::parse(R"({"spec": {"kind": "sphere", "n": 3, "p": 1}, "grid": [0, 1],
                                   "samples": [[1, 0, 0], [0, 1]]})"));
  });
  expect_error(Errc::not_on_manifold, [] {
    curve_from_json(Json::parse(R"({"spec": {"kind": "sphere", "n": 3, "p": 1}, "grid": [0, 1],
                                   "samples": [[1, 0, 0], [0, 2, 0]]})"));
  });
}

TEST(Json, RepairAndTolerance) {
  const Json j = Json::parse(R"({"spec": {"kind": "sphere", "n": 3, "p": 1}, "grid": [0, 1],
                                 "samples": [[1, 0, 0], [0, 1.000001, 0]]})");
  expect_error(Errc::not_on_manifold, [&] { curve_from_json(j); });
  const DiscreteCurve loose = curve_from_json(j, {.tolerance = 1e-5});
  EXPECT_LE(loose.max_constraint_defect(), 1e-15);
  EXPECT_NO_THROW(srvt(loose));
  const DiscreteCurve c = curve_from_json(j, {.repair = true});
  EXPECT_LE(c.max_constraint_defect(), 1e-15);
}

TEST(Json, SingleSampleIsPointCurve) {
  const DiscreteCurve c = curve_from_json(Json::parse(R"({"spec": {"kind": "sphere", "n": 3, "p": 1},
                                                            "grid": [0], "samples": [[0, 0, 1]]})"));
  EXPECT_TRUE(c.is_point());
}

TEST(Json, PathRoundTrip) {
  const DiscreteCurve c = generate(Generator::fig2_c1, 10);
  for (TransformKind k : {TransformKind::srvt, TransformKind::reductive}) {
    const AlgebraPath q = transform(c, k, InnerMode::frobenius);
    const AlgebraPath back = path_from_json(Json::parse(path_to_json(q).dump()));
    EXPECT_EQ(max_value_deviation(back, q), 0.0);
    EXPECT_EQ(back.kind(), k);
    EXPECT_EQ(back.inner(), InnerMode::frobenius);
    EXPECT_EQ(back.frame().has_value(), q.frame().has_value());
    EXPECT_LE(max_sample_deviation(inverse_transform(back), c), 1e-9);
  }
}

TEST(Json, ReportFields) {
  const DiscreteCurve c = generate(Generator::fig1_c1, 10);
  ShapeDistanceOptions o;
  o.resample = 10;
  const Json j = report_to_json(shape_distance(c, c, o));
  for (const char* key : {"d_param", "d_shape", "warp", "transform"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["transform"], "srvt");
  EXPECT_EQ(j["warp"].size(), 11u);
}

TEST(Files, SaveLoadAtomic) {
  const fs::path p = temp_file("curve.json");
  const DiscreteCurve c = generate(Generator::fig1_c2, 7);
  save_curve(p, c, std::string("fig1"));
  EXPECT_FALSE(fs::exists(fs::path(p.string() + ".tmp")));
  const DiscreteCurve back = load_curve(p);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(back.sample(i).coords(), c.sample(i).coords());
  EXPECT_EQ(read_json(p)["name"], "fig1");

  const fs::path q = temp_file("path.json");
  save_path(q, srvt(c));
  EXPECT_EQ(max_value_deviation(load_path(q), srvt(c)), 0.0);
}

TEST(Files, ReadErrors) {
  expect_error(Errc::schema, [] { read_json(temp_file("does_not_exist.json")); });
  const fs::path p = temp_file("broken.json");
  std::ofstream(p) << "{ not json";
  expect_error(Errc::schema, [&] { read_json(p); });
}
