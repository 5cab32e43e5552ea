#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "convexsym/io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "convexsym_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

int run(const std::string& args, std::string* out = nullptr) {
  const std::string capture = path("stdout.txt");
  const std::string cmd = std::string(CSYM_BINARY) + " " + args + " > " + capture + " 2> " + path("stderr.txt");
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, GenCube) {
  ASSERT_EQ(run("gen --kind cube --dim 3 --out " + path("cube.json")), 0);
  csym::Json j = csym::read_json_file(path("cube.json"));
  EXPECT_EQ(j["vertices"].size(), 8u);
  EXPECT_EQ(run("gen --kind cube --dim 9 --out " + path("bad.json")), 2);
}

TEST(Cli, GenRandomHullIsDeterministic) {
  ASSERT_EQ(run("gen --kind random-hull --dim 2 --points 12 --seed 7 --out " + path("k1.json")), 0);
  ASSERT_EQ(run("gen --kind random-hull --dim 2 --points 12 --seed 7 --out " + path("k2.json")), 0);
  EXPECT_EQ(slurp(path("k1.json")), slurp(path("k2.json")));
}

TEST(Cli, SymOperators) {
  ASSERT_EQ(run("gen --kind simplex --dim 2 --out " + path("tri.json")), 0);
  std::string out;
  ASSERT_EQ(run("sym --op steiner --subspace e1 --in " + path("tri.json") + " --out " + path("s.json"), &out), 0);
  csym::Json printed = csym::Json::parse(out);
  EXPECT_EQ(printed["error"], 0.0);
  ASSERT_EQ(run("sym --op minkowski --subspace e1 --in " + path("tri.json") + " --out " + path("m.json")), 0);
  EXPECT_EQ(csym::read_json_file(path("m.json"))["kind"], "polytope");
  EXPECT_EQ(run("sym --op steiner --subspace o --in " + path("tri.json") + " --out " + path("x.json")), 2);
  EXPECT_EQ(run("sym --op steiner --subspace e1 --in " + path("missing.json") + " --out " + path("x.json")), 3);
}

TEST(Cli, SymNaturalPathological) {
  ASSERT_EQ(run("gen --kind cube --dim 2 --out " + path("sq.json")), 0);
  std::string out;
  ASSERT_EQ(run("sym --op natural --inner pathological --m-max 64 --in " + path("sq.json") + " --out " + path("n.json"),
                &out),
            0);
  csym::Json printed = csym::Json::parse(out);
  EXPECT_GT(printed["residual"].get<double>(), 0.0);
  EXPECT_GE(printed["achieved_m"].get<int>(), 1);
}

TEST(Cli, Measure) {
  ASSERT_EQ(run("gen --kind cube --dim 3 --out " + path("cube3.json")), 0);
  std::string out;
  ASSERT_EQ(run("measure --what vj --j 1 --in " + path("cube3.json") + " --seed 1 --samples 100000", &out), 0);
  csym::Json e = csym::Json::parse(out);
  EXPECT_LE(std::abs(e["value"].get<double>() - 3.0), 3.0 * e["std_error"].get<double>());
  EXPECT_EQ(run("measure --what vj --j 5 --in " + path("cube3.json")), 2);
  ASSERT_EQ(run("gen --kind ball --dim 3 --radius 1 --out " + path("ball.json")), 0);
  ASSERT_EQ(run("measure --what width --in " + path("ball.json"), &out), 0);
  EXPECT_EQ(csym::Json::parse(out)["value"], 2.0);
}

TEST(Cli, VerifyFixturesAndPlot) {
  ASSERT_EQ(run("verify --suite fixtures --out " + path("r1.json")), 0);
  ASSERT_EQ(run("verify --suite fixtures --out " + path("r2.json")), 0);
  EXPECT_EQ(slurp(path("r1.json")), slurp(path("r2.json")));
  ASSERT_EQ(run("plot --kind ne-convergence --report " + path("r1.json") + " --out " + path("ne.svg")), 0);
  EXPECT_NE(slurp(path("ne.svg")).find("<svg"), std::string::npos);
  ASSERT_EQ(run("plot --kind mc-error --report " + path("r1.json") + " --out " + path("mc.svg")), 0);

  std::ofstream(path("empty.json")) << "[]\n";
  EXPECT_EQ(run("plot --kind mc-error --report " + path("empty.json") + " --out " + path("e.svg")), 2);
  EXPECT_EQ(run("plot --kind mc-error --report " + path("absent.json") + " --out " + path("e.svg")), 3);
  EXPECT_EQ(run("verify --suite fixtures --out /nonexistent-dir/r.json"), 3);
  EXPECT_EQ(run("verify --suite nothing"), 2);
}
