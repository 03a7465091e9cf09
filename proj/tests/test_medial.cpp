#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace edgegame;
using testing_helpers::sorted_rows;

TEST(Medial, TicTacToeHasThreeComponents) {
  const auto mc = trace_medial(fixtures::tictactoe_torus());
  EXPECT_EQ(mc.count, 3u);
  EXPECT_FALSE(mc.edgeless);
}

TEST(Medial, SixVertexTracesMatchReferenceMatrix) {
  const auto mc = trace_medial(fixtures::six_vertex_torus());
  ASSERT_EQ(mc.count, 4u);
  const std::vector<std::string> reference{"11001100", "00111100", "01100011", "10010011"};
  EXPECT_EQ(sorted_rows(mc.traces), sorted_rows(testing_helpers::matrix(reference)));
  EXPECT_EQ(space_P(fixtures::six_vertex_torus()).dimension(), 3u);
}

TEST(Medial, EveryEdgeCrossedTwice) {
  for (const auto& f : fixtures::all) {
    const auto g = parse_graph(f.text);
    const auto mc = trace_medial(g);
    std::vector<unsigned> total(g.edge_count(), 0);
    for (const auto& m : mc.multiplicities)
      for (std::size_t j = 0; j < m.size(); ++j) total[j] += m[j];
    for (unsigned t : total) EXPECT_EQ(t, 2u) << f.name;
  }
}

TEST(Medial, PlaneTriangles) {
  const auto mc = trace_medial(fixtures::triangles_digon_plane());
  EXPECT_EQ(mc.count, 3u);
  EXPECT_EQ(sorted_rows(mc.traces), (std::vector<std::string>{"0000011", "1011100", "1011111"}));
}

TEST(Medial, DegenerateGraphs) {
  const auto none = trace_medial(fixtures::load("single_vertex"));
  EXPECT_TRUE(none.edgeless);
  EXPECT_EQ(none.count, 0u);
  EXPECT_EQ(space_P(fixtures::load("single_vertex")).dimension(), 0u);

  const auto rose = trace_medial(fixtures::rose_torus());
  EXPECT_EQ(rose.count, 2u);
  EXPECT_EQ(sorted_rows(rose.traces), (std::vector<std::string>{"11", "11"}));

  EXPECT_EQ(trace_medial(fixtures::load("single_edge")).count, 1u);
  EXPECT_EQ(trace_medial(fixtures::load("plane_loop")).count, 1u);
  EXPECT_EQ(trace_medial(fixtures::load("digon")).count, 2u);
  EXPECT_EQ(trace_medial(fixtures::load("square")).count, 2u);
}

TEST(Medial, StrandsAlternateDirection) {
  const auto mc = trace_medial(fixtures::tictactoe_torus());
  for (const auto& strand : mc.strands)
    for (std::size_t i = 0; i + 1 < strand.size(); ++i) EXPECT_NE(strand[i].clockwise, strand[i + 1].clockwise);
}
