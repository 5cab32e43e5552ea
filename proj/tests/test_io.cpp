#include <gtest/gtest.h>

#include <filesystem>

#include "convexsym/io.hpp"
#include "convexsym/svg.hpp"

using namespace csym;

namespace {

Subspace x_axis(int n) {
  int a[] = {0};
  return Subspace::coordinate(n, a);
}

}  // namespace

TEST(Json, SubspaceRoundTrip) {
  RngStream rng(1, 0);
  Subspace h = haar_subspace(4, 2, rng);
  Subspace back = subspace_from_json(subspace_to_json(h));
  EXPECT_EQ(back.dim(), 2);
  EXPECT_LE((back.basis() * back.basis().transpose() - h.basis() * h.basis().transpose()).norm(), 1e-12);
  Subspace o = subspace_from_json(subspace_to_json(Subspace(3)));
  EXPECT_EQ(o.dim(), 0);
  EXPECT_EQ(o.ambient_dim(), 3);
}

TEST(Json, BodyRoundTrip) {
  std::vector<Body> bodies{
      Polytope::hull({make_vector({0, 0}), make_vector({1, 0}), make_vector({0, 1})}),
      Ball(make_vector({1, 2, 3}), 0.5),
      SphericalCylinder(x_axis(3), 1.0, 2.0, make_vector({1, 0, 0})),
      SpecialForm(Polytope::hull({make_vector({-1, 0}), make_vector({2, 0})}), x_axis(2), 0.25),
  };
  for (const auto& b : bodies) {
    Json j = body_to_json(b);
    Body back = body_from_json(j);
    EXPECT_EQ(back.index(), b.index());
    EXPECT_LE(hausdorff(back, b), 1e-15);
    EXPECT_EQ(dump(body_to_json(back)), dump(j));
  }
}

TEST(Json, BodyErrors) {
  EXPECT_THROW(body_from_json(Json::parse(R"({"kind":"blob"})")), InvalidInput);
  EXPECT_THROW(body_from_json(Json::parse(R"({"kind":"ball","center":[0,0],"radius":-1})")), InvalidInput);
  EXPECT_THROW(body_from_json(Json::parse(R"({"kind":"polytope","vertices":[]})")), InvalidInput);
}

TEST(Json, SymmetrizerRoundTrip) {
  std::vector<Symmetrizer> ops{Symmetrizer::steiner(x_axis(2)), Symmetrizer::minkowski(Subspace(3)),
                               Symmetrizer::pathological(Subspace(2)),
                               Symmetrizer::natural(Symmetrizer::minkowski(x_axis(2)), 32, 1e-5)};
  for (const auto& op : ops) {
    Json j = symmetrizer_to_json(op);
    EXPECT_EQ(dump(symmetrizer_to_json(symmetrizer_from_json(j))), dump(j));
  }
}

TEST(Json, ReportRoundTrip) {
  PropertyReport r;
  r.property = "idempotent";
  r.op = Symmetrizer::pathological(Subspace(2));
  r.trials = 50;
  r.violations = 50;
  r.max_violation = 1.5;
  r.seed = 42;
  r.verdict = Verdict::fail;
  r.expected = Verdict::fail;
  r.value = 0.25;
  r.series = {{1, 2}, {3, 4}};
  r.x_label = "m";
  r.y_label = "step";
  Json j = report_to_json(r);
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["operator"]["op"], "pathological");
  PropertyReport back = report_from_json(j);
  EXPECT_EQ(dump(report_to_json(back)), dump(j));
  std::vector<PropertyReport> list{r, back};
  EXPECT_EQ(reports_from_json(reports_to_json(list)).size(), 2u);
}

TEST(Files, ReadWrite) {
  const std::string path = (std::filesystem::temp_directory_path() / "convexsym_io_test.json").string();
  write_text_file(path, dump(Json{{"a", 1}}));
  EXPECT_EQ(read_json_file(path)["a"], 1);
  std::filesystem::remove(path);
  EXPECT_THROW(read_json_file(path), IoError);
  EXPECT_THROW(write_text_file("/nonexistent-dir/x.json", "{}"), IoError);
}

TEST(Svg, SeriesPlot) {
  PropertyReport r;
  r.type = "series";
  r.property = "ne-convergence";
  r.series = {{2, 0.5}, {3, 0.25}, {4, 0.125}};
  std::string svg = series_svg(r, {});
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("polyline"), std::string::npos);
  PropertyReport empty;
  EXPECT_THROW(series_svg(empty, {}), InvalidInput);
  r.series.push_back({5, 0.0});
  EXPECT_THROW(series_svg(r, {}), InvalidInput);
}
