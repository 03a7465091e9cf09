#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace edgegame;

TEST(Homology, SixVertexWithReferenceTree) {
  const auto g = fixtures::six_vertex_torus();
  TreeOptions opt;
  opt.tree = std::vector<std::size_t>{0, 2, 3, 4, 6};
  const auto h = analyze_homology(g, opt);
  EXPECT_EQ(h.decomposition.cotree_edges, std::vector<std::size_t>{1});
  EXPECT_EQ(h.decomposition.leftover_edges, (std::vector<std::size_t>{5, 7}));
  ASSERT_EQ(h.map.cycles.size(), 2u);
  EXPECT_EQ(h.map.cycles[0].to_string(), "00000100");
  EXPECT_EQ(h.map.cycles[1].to_string(), "00000001");
  EXPECT_EQ(gf2::rank(h.image), 2u);
  EXPECT_EQ(h.kernel_dim, 1u);
  EXPECT_EQ(h.class_count, 8);

  // phi on the reference trace rows, in reference order
  const std::vector<std::string> traces{"11001100", "00111100", "01100011", "10010011"};
  const std::vector<std::string> images{"10", "10", "01", "01"};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(phi(h.map, gf2::BitVector::from_string(traces[i])).to_string(), images[i]);
}

TEST(Homology, TicTacToe) {
  const auto g = fixtures::tictactoe_torus();
  const auto h = analyze_homology(g);
  EXPECT_EQ(h.decomposition.tree_edges.size(), 3u);
  EXPECT_EQ(h.decomposition.cotree_edges.size(), 4u);
  EXPECT_EQ(h.decomposition.leftover_edges.size(), 2u);
  EXPECT_EQ(h.kernel_dim, 1u);
  EXPECT_EQ(h.class_count, 8);
}

TEST(Homology, KernelIsDualCocycleSpace) {
  for (const auto& f : fixtures::all) {
    const auto g = parse_graph(f.text);
    const auto hm = homology_map(g);
    EXPECT_EQ(hm.rank(), 2 * g.genus()) << f.name;
    const auto dinc = dual_incidence_matrix(g);
    for (const auto& r : dinc.rows()) EXPECT_TRUE(phi(hm, r).none()) << f.name;
  }
}

TEST(Homology, PhiRejectsNonCycles) {
  const auto g = fixtures::six_vertex_torus();
  EXPECT_THROW(phi(homology_map(g), gf2::BitVector::unit(8, 0)), InputError);
}

TEST(Homology, RejectsBadTree) {
  const auto g = fixtures::six_vertex_torus();
  TreeOptions opt;
  opt.tree = std::vector<std::size_t>{0, 1, 2};
  EXPECT_THROW(tree_cotree(g, opt), InputError);
  opt.tree = std::vector<std::size_t>{0, 2, 3, 4, 9};
  EXPECT_THROW(tree_cotree(g, opt), InputError);
}

TEST(Homology, KernelDimensionIndependentOfTieBreaking) {
  for (const auto& f : fixtures::all) {
    const auto g = parse_graph(f.text);
    const std::size_t b = kernel_dim_on_P(g);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      TreeOptions opt;
      opt.shuffle_seed = seed;
      EXPECT_EQ(kernel_dim_on_P(g, opt), b) << f.name;
    }
  }
}

TEST(Homology, PlaneGraphsHaveNoHomology) {
  const auto g = fixtures::triangles_digon_plane();
  const auto h = analyze_homology(g);
  EXPECT_TRUE(h.decomposition.leftover_edges.empty());
  EXPECT_EQ(h.class_count, 4);
}

TEST(Homology, DualMapHasSameKernelOnP) {
  const auto g = fixtures::tictactoe_torus();
  const auto p = space_P(g);
  EXPECT_TRUE(gf2::same_row_space(phi_kernel_on_P(homology_map(g), p), phi_kernel_on_P(dual_homology_map(g), p)));
}
