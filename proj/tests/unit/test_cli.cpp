#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "homshape/homshape.hpp"

using namespace homshape;
namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "homshape_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name) { return (work_dir() / name).string(); }

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" HOMSHAPE_CLI_PATH "\" " + args + " > " + file("stdout.txt") + " 2> " +
                          file("stderr.txt");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Json stdout_json() { return read_json(file("stdout.txt")); }

void generate(const std::string& kind, int n, const std::string& out) {
  ASSERT_EQ(run("generate " + kind + " --n " + std::to_string(n) + " -o " + file(out)), 0);
}

}  // namespace

TEST(Cli, GenerateWritesCurve) {
  generate("great_circle", 4, "gc.json");
  const DiscreteCurve c = load_curve(file("gc.json"));
  EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(read_json(file("gc.json"))["name"], "great_circle");
  ASSERT_EQ(run("generate fig2_c1 --n 3"), 0);
  const DiscreteCurve s = curve_from_json(stdout_json());
  EXPECT_LE((s.sample(0).coords() - Matrix(fig2_c1(0.0))).norm(), 1e-15);
}

TEST(Cli, GenerateRandomWalkOnFrames) {
  ASSERT_EQ(run("generate random_walk --manifold stiefel --dim 4 --p 2 --n 20 --seed 3 -o " + file("rw.json")), 0);
  EXPECT_EQ(load_curve(file("rw.json")).spec(), ManifoldSpec::stiefel(4, 2));
}

TEST(Cli, TransformInvertRoundTrip) {
  generate("fig1_c1", 30, "f1.json");
  for (const std::string t : {"srvt", "reductive"}) {
    ASSERT_EQ(run("transform -i " + file("f1.json") + " --transform " + t + " -o " + file("q.json")), 0);
    ASSERT_EQ(run("invert -i " + file("q.json") + " -o " + file("back.json")), 0);
    EXPECT_LE(max_sample_deviation(load_curve(file("back.json")), load_curve(file("f1.json"))), 1e-9) << t;
  }
}

TEST(Cli, SelfDistanceIsZero) {
  generate("fig2_c1", 40, "a.json");
  ASSERT_EQ(run("distance -i " + file("a.json") + " --input2 " + file("a.json") + " --n 20"), 0);
  const Json r = stdout_json();
  EXPECT_EQ(r["d_param"].get<double>(), 0.0);
  EXPECT_EQ(r["d_shape"].get<double>(), 0.0);
  EXPECT_EQ(r["transform"], "srvt");
}

TEST(Cli, GeodesicAtZeroReproducesInput) {
  generate("fig2_c1", 50, "g1.json");
  generate("fig2_c2", 50, "g2.json");
  ASSERT_EQ(run("geodesic -i " + file("g1.json") + " --input2 " + file("g2.json") + " --theta 0 --theta 0.5 -o " +
                file("geo")),
            0);
  EXPECT_LE(max_sample_deviation(load_curve(file("geo_0.json")), load_curve(file("g1.json"))), 1e-9);
  EXPECT_LE(load_curve(file("geo_1.json")).max_constraint_defect(), 1e-10);
  std::ifstream csv(file("geo.csv"));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "theta,t,x,y,z");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  EXPECT_EQ(rows, 2 * 51);
}

TEST(Cli, ReparamImprovesFig2Pair) {
  generate("fig2_c1", 100, "r1.json");
  generate("fig2_c2", 100, "r2.json");
  ASSERT_EQ(run("reparam -i " + file("r1.json") + " --input2 " + file("r2.json") + " --n 100 --window 20 -o " +
                file("aligned.json")),
            0);
  const Json r = stdout_json();
  EXPECT_LT(r["d_shape"].get<double>(), r["d_param"].get<double>());
  EXPECT_EQ(load_curve(file("aligned.json")).size(), 101u);
}

TEST(Cli, CheckPasses) {
  EXPECT_EQ(run("check --seed 7"), 0);
  std::ifstream out(file("stdout.txt"));
  std::string text((std::istreambuf_iterator<char>(out)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.find("FAIL"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("transform -i " + file("missing.json")), 2);
  EXPECT_EQ(run("generate spiral"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("transform"), 2);
  std::ofstream(file("bad.json")) << R"({"spec": {"kind": "sphere", "n": 3, "p": 1}, "grid": [0, 1],
                                        "samples": [[1, 0, 0], [0, 1.000001, 0]]})";
  EXPECT_EQ(run("transform -i " + file("bad.json")), 2);
  EXPECT_EQ(run("transform -i " + file("bad.json") + " --repair-tangents"), 0);
  EXPECT_EQ(run("transform -i " + file("bad.json"), "HOMSHAPE_TOL=1e-5"), 0);
  EXPECT_EQ(run("transform -i " + file("bad.json"), "HOMSHAPE_TOL=-1"), 2);
  generate("fig1_c1", 10, "b1.json");
  generate("fig2_c1", 10, "b2.json");
  EXPECT_EQ(run("distance -i " + file("b1.json") + " --input2 " + file("b2.json") + " --n 10"), 2);
  EXPECT_EQ(run("distance -i " + file("b1.json") + " --input2 " + file("b2.json") + " --n 10 --align-start"), 0);
}

TEST(Cli, NumericalErrorsExitThree) {
  std::ofstream(file("flat.json")) << R"({"spec": {"kind": "sphere", "n": 3, "p": 1}, "grid": [0, 0.5, 1],
                                         "samples": [[1, 0, 0], [1, 0, 0], [0, 1, 0]]})";
  EXPECT_EQ(run("transform -i " + file("flat.json")), 3);
  std::ofstream(file("anti.json")) << R"({"spec": {"kind": "sphere", "n": 3, "p": 1}, "grid": [0, 1],
                                         "samples": [[1, 0, 0], [-1, 0, 0]]})";
  EXPECT_EQ(run("transform -i " + file("anti.json")), 3);
}
