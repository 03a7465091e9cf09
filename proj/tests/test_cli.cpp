#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "helpers.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "edgegame");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = edgegame::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EDGEGAME_DATA_DIR) + "/" + name + ".rot"; }

}  // namespace

TEST(Cli, CountAllAgrees) {
  const auto r = run({"count", data("tictactoe_torus"), "--method", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "direct    8\nhomology  8\noracle    8\nagreement OK\n");
}

TEST(Cli, BrtEvaluatesWithNegativeAndFractionalArguments) {
  const auto r = run({"brt", data("six_vertex_torus"), "--eval", "-2", "-2", "1/4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "-8\n");
}

TEST(Cli, BrtPolynomial) {
  const auto r = run({"brt", "--fixture", "rose_torus"});
  EXPECT_EQ(r.out, "1 + 2*y + y^2*z\n");
}

TEST(Cli, Tutte) {
  const auto r = run({"tutte", data("triangles_digon_plane"), "--eval", "-1", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-4\n");
}

TEST(Cli, SameClassIdentical) {
  const auto r = run({"same-class", data("tictactoe_torus"), "--a", "101010101", "--b", "101010101"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
}

TEST(Cli, HomologyWithTree) {
  const auto r = run({"--json", "homology", data("six_vertex_torus"), "--tree", "0,2,3,4,6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cycles"], (nlohmann::json{"00000100", "00000001"}));
  EXPECT_EQ(j["cotree"], nlohmann::json{1});
  EXPECT_EQ(j["b"], 1);
  EXPECT_EQ(j["class_count"], "8");
}

TEST(Cli, InfoJsonIsStable) {
  const auto a = run({"info", data("tictactoe_torus"), "--json"});
  const auto b = run({"info", data("tictactoe_torus"), "--json"});
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["dim_U_plus_U_star"], 6);
  EXPECT_EQ(j["dim_U_cap_U_star"], 1);
  EXPECT_EQ(j["class_count"], "8");
}

TEST(Cli, DualRoundTrips) {
  const auto r = run({"dual", data("tictactoe_torus")});
  ASSERT_EQ(r.code, 0);
  const auto d = edgegame::parse_graph(r.out);
  EXPECT_EQ(d.vertex_count(), 5u);
  EXPECT_EQ(d.face_count(), 4u);
}

TEST(Cli, MedialAndSignatureAndBot) {
  const auto m = run({"--json", "medial", "--fixture", "six_vertex_torus"});
  EXPECT_EQ(nlohmann::json::parse(m.out)["components"], 4);
  const auto s = run({"signature", "--fixture", "tictactoe_torus", "--coloring", "000000000"});
  EXPECT_EQ(s.out, "000\n");
  const auto b = run({"bot", "--fixture", "tictactoe_torus"});
  EXPECT_NE(b.out.find("rank 6"), std::string::npos);
}

TEST(Cli, Reps) {
  const auto r = run({"reps", data("triangles_digon_plane")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "S 0 5\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"info", "/nonexistent.rot"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"signature", "--fixture", "tictactoe_torus", "--coloring", "01"}).code, 2);
  EXPECT_EQ(run({"brt", "--fixture", "rose_torus", "--eval", "0.5", "1", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--fixture", "rose_torus", "--method", "magic"}).code, 2);
  EXPECT_EQ(run({"reps", "--fixture", "tictactoe_torus"}).code, 3);
  EXPECT_EQ(run({"count", "--fixture", "tictactoe_torus", "--method", "oracle", "--oracle-cap", "5"}).code, 4);
  EXPECT_EQ(run({"brt", "--fixture", "tictactoe_torus", "--cap", "5"}).code, 4);
}

TEST(Cli, Selftest) {
  const auto r = run({"selftest"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("selftest passed"), std::string::npos);
}
