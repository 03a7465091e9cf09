#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace edgegame;

TEST(Brt, TicTacToeMatchesReferencePolynomial) {
  const auto p = brt_polynomial(fixtures::tictactoe_torus());
  EXPECT_EQ(p, testing_helpers::tictactoe_brt()) << p.to_string();
  EXPECT_EQ(p.evaluate(Rational(-2), Rational(-2), Rational(1, 4)), Rational(-4));
  EXPECT_EQ(medial_component_count_via_brt(p), 3u);
}

TEST(Brt, SixVertexMatchesReferencePolynomial) {
  const auto p = brt_polynomial(fixtures::six_vertex_torus());
  EXPECT_EQ(p, testing_helpers::six_vertex_brt()) << p.to_string();
  EXPECT_EQ(p.evaluate(Rational(-2), Rational(-2), Rational(1, 4)), Rational(-8));
  EXPECT_EQ(medial_component_count_via_brt(p), 4u);
}

TEST(Brt, RoseTorus) {
  const auto p = brt_polynomial(fixtures::rose_torus());
  EXPECT_EQ(p, testing_helpers::polynomial({{1, 0, 0, 0}, {2, 0, 1, 0}, {1, 0, 2, 1}}));
  EXPECT_EQ(medial_component_count_via_brt(p), 2u);
}

TEST(Brt, SmallGraphs) {
  using testing_helpers::polynomial;
  EXPECT_EQ(brt_polynomial(fixtures::load("single_vertex")), polynomial({{1, 0, 0, 0}}));
  EXPECT_EQ(brt_polynomial(fixtures::load("single_edge")), polynomial({{1, 1, 0, 0}, {1, 0, 0, 0}}));
  EXPECT_EQ(brt_polynomial(fixtures::load("plane_loop")), polynomial({{1, 0, 0, 0}, {1, 0, 1, 0}}));
  // digon: empty, two single edges, both edges
  EXPECT_EQ(brt_polynomial(fixtures::load("digon")), polynomial({{1, 1, 0, 0}, {2, 0, 0, 0}, {1, 0, 1, 0}}));
}

TEST(Brt, ZOneIsTutte) {
  const auto g = fixtures::tictactoe_torus();
  EXPECT_EQ(brt_polynomial(g).at_z_one(), tutte_rank_polynomial(g));
  EXPECT_EQ(tutte_eval(g, Rational(-1), Rational(-1)), Rational(-4));
  EXPECT_EQ(tutte_by_rank_oracle(g, Rational(-1), Rational(-1)), Rational(-4));
  EXPECT_EQ(tutte_eval(g, Rational(2), Rational(2)), Rational(512));
}

TEST(Brt, PlaneTriangles) {
  const auto g = fixtures::triangles_digon_plane();
  EXPECT_EQ(tutte_eval(g, Rational(-1), Rational(-1)), Rational(-4));
  EXPECT_EQ(medial_component_count_via_brt(g), 3u);
}

TEST(Brt, ToStringIsReadable) {
  EXPECT_EQ(brt_polynomial(fixtures::rose_torus()).to_string(), "1 + 2*y + y^2*z");
}

TEST(Brt, ThreadCountDoesNotChangeResult) {
  const auto g = fixtures::tictactoe_torus();
  EXPECT_EQ(brt_polynomial(g, {26, 1}), brt_polynomial(g, {26, 4}));
}

TEST(Brt, EdgeCap) {
  const auto g = fixtures::tictactoe_torus();
  EXPECT_THROW(brt_polynomial(g, {8, 0}), CapExceededError);
  try {
    brt_polynomial(g, {8, 0});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
}
