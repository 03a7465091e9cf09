#include <set>

#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace edgegame;

TEST(Representatives, PlaneTriangles) {
  const auto g = fixtures::triangles_digon_plane();
  const auto rs = planar_representatives(g);
  EXPECT_EQ(rs.edges, (std::vector<std::size_t>{0, 5}));
  EXPECT_EQ(rs.colorings.size(), 4u);
  EXPECT_TRUE(verify_representatives(g, rs));
  EXPECT_TRUE(gf2::same_row_space(dual_cocycle_space(g), cycle_space(g)));
}

TEST(Representatives, MatchOracleCensus) {
  for (const auto& f : fixtures::all) {
    const auto g = parse_graph(f.text);
    if (g.genus() != 0) continue;
    const auto rs = planar_representatives(g);
    const auto census = enumerate_classes(g);
    std::set<gf2::BitVector> minima;
    for (const auto& w : rs.colorings) minima.insert(orbit_of(g, w).front());
    EXPECT_EQ(minima.size(), rs.colorings.size()) << f.name;
    EXPECT_EQ(BigInt(minima.size()), census.class_count) << f.name;
  }
}

TEST(Representatives, UnsupportedOffThePlane) {
  const auto g = fixtures::tictactoe_torus();
  EXPECT_THROW(planar_representatives(g), UnsupportedError);
  try {
    planar_representatives(g);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported);
  }
}

TEST(Representatives, VerifyRejectsWrongSet) {
  const auto g = fixtures::triangles_digon_plane();
  auto rs = planar_representatives(g);
  rs.edges = {0, 0};
  EXPECT_FALSE(verify_representatives(g, rs));
  rs.edges = {0};
  EXPECT_FALSE(verify_representatives(g, rs));
}
