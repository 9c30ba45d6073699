#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "toric/io.hpp"

using namespace toric;
namespace fs = std::filesystem;

namespace {

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "toric_io_test";
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = (dir_ / name).string();
    std::ofstream out(path);
    out << content;
    return path;
  }

  std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(TempDir, LoadConfigAcceptsIntegersAndDecimals) {
  const auto path =
      write("c.json", R"({"dim": 2, "points": [[0,0],[1,0],[0,1],[0.5,0.25]]})");
  const auto config = load_config(path);
  EXPECT_EQ(config.dim, 2);
  ASSERT_EQ(config.points.size(), 4u);
  EXPECT_DOUBLE_EQ(config.points[3][0], 0.5);
}

TEST_F(TempDir, LoadConfigErrors) {
  EXPECT_THROW(load_config((dir_ / "missing.json").string()), ParseError);
  EXPECT_THROW(load_config(write("bad.json", "{not json")), ParseError);
  EXPECT_THROW(load_config(write("nofield.json", R"({"points": [[0]]})")), ParseError);
  EXPECT_THROW(load_config(write("str.json",
                                 R"({"dim":1,"points":[["a"],[1]]})")),
               ParseError);
}

TEST_F(TempDir, LoadWeightsRejectsNonPositive) {
  EXPECT_THROW(load_weights(write("w.json", R"({"values": [1, 0, 2]})")), ParseError);
  const auto w = load_weights(write("w2.json", R"({"values": [1, 2.5]})"));
  EXPECT_DOUBLE_EQ(w.value(1), 2.5);
}

TEST_F(TempDir, ProjectionDefaultsOffsetToZero) {
  const auto p = load_projection(write("p.json", R"({"matrix": [[1, 0]]})"));
  ASSERT_EQ(p.offset.size(), 1u);
  EXPECT_DOUBLE_EQ(p.offset[0], 0.0);
  EXPECT_THROW(load_projection(write("p2.json",
                                     R"({"matrix": [[1,0]], "offset": [0,0]})")),
               ParseError);
}

TEST(Fmt17, SeventeenSignificantDigits) {
  EXPECT_EQ(fmt17(1.0 / 3.0), "0.33333333333333331");
  EXPECT_EQ(fmt17(1.0), "1");
  EXPECT_EQ(fmt17(-0.125), "-0.125");
}

TEST_F(TempDir, CsvRoundTripAndHeader) {
  const auto path = (dir_ / "out.csv").string();
  write_csv(path, {"x_1", "F_1"}, {{CsvCell(0.5), CsvCell(1.0 / 3.0)},
                                   {CsvCell(1.0), CsvCell(2L)}});
  const auto text = slurp(path);
  EXPECT_EQ(text,
            "x_1,F_1\n"
            "0.5,0.33333333333333331\n"
            "1,2\n");
}

TEST(TriangulationText, SerializeAndParse) {
  const auto t = Triangulation::from_simplices({{3, 1, 0}, {0, 2, 3}});
  EXPECT_EQ(triangulation_to_text(t), "[[0,1,3],[0,2,3]]");
  EXPECT_EQ(triangulation_from_text("[[0,1,3],[0,2,3]]"), t);
  EXPECT_THROW(triangulation_from_text("[[0,1"), ParseError);
}

TEST_F(TempDir, LoadTriangulationFromFile) {
  const auto path = write("t.txt", "[[0,1,3],[0,2,3]]\n");
  EXPECT_EQ(load_triangulation(path),
            Triangulation::from_simplices({{0, 1, 3}, {0, 2, 3}}));
  EXPECT_THROW(load_triangulation((dir_ / "missing.txt").string()), ParseError);
}

TEST_F(TempDir, SvgHasNoTimestampsAndExpectedShapes) {
  const auto path = (dir_ / "c.svg").string();
  std::vector<Vec> curve;
  for (int i = 0; i <= 10; ++i)
    curve.push_back({i / 10.0, std::sin(i / 10.0)});
  write_curve_svg(path, curve, {{0, 0}, {0.5, 1.0}, {1.0, 0.0}}, 0.1);
  const auto text = slurp(path);
  EXPECT_NE(text.find("<svg"), std::string::npos);
  EXPECT_NE(text.find("stroke-dasharray"), std::string::npos);
  EXPECT_EQ(text.find("date"), std::string::npos);
  // Byte-determinism: a second render is identical.
  const auto path2 = (dir_ / "c2.svg").string();
  write_curve_svg(path2, curve, {{0, 0}, {0.5, 1.0}, {1.0, 0.0}}, 0.1);
  EXPECT_EQ(text, slurp(path2));
}

TEST_F(TempDir, ObjUsesOneBasedTriangles) {
  const auto path = (dir_ / "m.obj").string();
  write_obj(path, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
  EXPECT_EQ(slurp(path),
            "v 0 0 0\n"
            "v 1 0 0\n"
            "v 0 1 0\n"
            "f 1 2 3\n");
}
