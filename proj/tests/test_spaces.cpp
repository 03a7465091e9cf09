#include <set>

#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace edgegame;

TEST(Spaces, TicTacToeDimensions) {
  const auto g = fixtures::tictactoe_torus();
  const auto s = summarize(g);
  EXPECT_EQ(gf2::rank(incidence_matrix(g)), 3u);
  EXPECT_EQ(s.dim_U, 3u);
  EXPECT_EQ(s.dim_U_star, 4u);
  EXPECT_EQ(s.dim_U_perp, 6u);
  EXPECT_EQ(s.dim_sum, 6u);
  EXPECT_EQ(s.dim_U_cap_U_star, 1u);
  EXPECT_EQ(s.bicycle_dim, 2u);
  EXPECT_EQ(s.class_count, 8);
}

TEST(Spaces, SixVertexDimensions) {
  const auto g = fixtures::six_vertex_torus();
  const auto s = summarize(g);
  EXPECT_EQ(s.dim_U, 5u);
  EXPECT_EQ(s.dim_U_star, 1u);
  EXPECT_EQ(s.dim_sum, 5u);
  EXPECT_EQ(s.class_count, 8);
  // e_1 cannot be reached by face moves alone
  EXPECT_FALSE(gf2::in_row_space(dual_incidence_matrix(g), gf2::BitVector::unit(8, 0)));
}

TEST(Spaces, PlaneGraphDualCocyclesAreCycles) {
  const auto g = fixtures::triangles_digon_plane();
  EXPECT_TRUE(gf2::same_row_space(dual_cocycle_space(g), cycle_space(g)));
  EXPECT_EQ(class_count_direct(g), 4);
}

TEST(Spaces, MovesToggleIncidentEdges) {
  const auto g = fixtures::tictactoe_torus();
  const gf2::BitVector w(9);
  EXPECT_EQ(apply_vertex_move(g, w, 0), incidence_matrix(g).row(0));
  EXPECT_EQ(apply_face_move(g, w, 2), dual_incidence_matrix(g).row(2));
  EXPECT_EQ(apply_vertex_move(g, apply_vertex_move(g, w, 1), 1), w);
  EXPECT_THROW(apply_vertex_move(g, w, 4), InputError);
  EXPECT_THROW(apply_face_move(g, w, 5), InputError);
}

TEST(Spaces, LoopFaceMoveCancels) {
  // a loop bounding the same face on both sides is toggled twice
  const auto rose = fixtures::rose_torus();
  EXPECT_TRUE(apply_face_move(rose, gf2::BitVector(2), 0).none());
  EXPECT_TRUE(apply_vertex_move(rose, gf2::BitVector(2), 0).none());
  EXPECT_EQ(class_count_direct(rose), 4);
}

TEST(Spaces, SignatureSeparatesAllClasses) {
  const auto g = fixtures::tictactoe_torus();
  const ClassSignature sig(g);
  EXPECT_EQ(sig.length(), 3u);
  std::set<std::string> seen;
  for (std::uint32_t x = 0; x < (1u << 9); ++x) {
    gf2::BitVector w(9);
    for (std::size_t j = 0; j < 9; ++j)
      if ((x >> j) & 1u) w.set(j);
    seen.insert(sig(w).to_string());
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(Spaces, SameClassAfterMoves) {
  const auto g = fixtures::six_vertex_torus();
  const auto w = parse_coloring(g, "10110010");
  auto v = apply_vertex_move(g, w, 3);
  v = apply_face_move(g, v, 1);
  EXPECT_TRUE(same_class(g, w, v));
  EXPECT_FALSE(same_class(g, w, w ^ gf2::BitVector::unit(8, 0)));
  EXPECT_EQ(class_signature(g, w), class_signature(g, v));
}

TEST(Spaces, ColoringLengthChecked) {
  const auto g = fixtures::six_vertex_torus();
  EXPECT_THROW(parse_coloring(g, "101"), InputError);
  EXPECT_THROW(parse_coloring(g, "1011001x"), InputError);
}

TEST(Spaces, BotMatrixRank) {
  const auto g = fixtures::tictactoe_torus();
  EXPECT_EQ(bot_matrix(g).row_count(), 3u + 4u);
  EXPECT_EQ(gf2::rank(bot_matrix(g)), 6u);
  EXPECT_EQ(gf2::rank(bot_matrix(fixtures::six_vertex_torus())), 5u);
  for (std::size_t f = 0; f < g.face_count(); ++f)
    if (!face_touches_vertex(g, f, 0)) {
      EXPECT_THROW(bot_matrix(g, 0, f), InputError);
    }
}
