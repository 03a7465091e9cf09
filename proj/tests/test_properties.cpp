// Randomized properties. Seeds are fixed so failures reproduce.

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace edgegame;

namespace {

gf2::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  gf2::BitMatrix m(rows, cols);
  std::bernoulli_distribution coin(0.4);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng)) m.set(r, c);
  return m;
}

gf2::BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
  gf2::BitVector v(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) v.set(i);
  return v;
}

}  // namespace

TEST(Properties, RankNullity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = rng() % 9, cols = 1 + rng() % 80;
    const auto m = random_matrix(rng, rows, cols);
    const auto k = gf2::kernel_basis(m);
    EXPECT_EQ(gf2::rank(m) + k.row_count(), cols);
    EXPECT_EQ(gf2::rank(k), k.row_count());
    for (const auto& v : k.rows())
      for (const auto& r : m.rows()) EXPECT_FALSE(v.dot(r));
  }
}

TEST(Properties, RrefIsIdempotentAndSpanPreserving) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_matrix(rng, rng() % 10, 1 + rng() % 70);
    const auto e = gf2::rref(m);
    EXPECT_EQ(gf2::rref(e.matrix).matrix, e.matrix);
    EXPECT_TRUE(gf2::row_space_contains(m, e.matrix));
    EXPECT_TRUE(gf2::row_space_contains(e.matrix, m));
  }
}

TEST(Properties, IntersectionDimensionFormula) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const std::size_t cols = 1 + rng() % 20;
    const auto a = random_matrix(rng, rng() % 8, cols);
    const auto b = random_matrix(rng, rng() % 8, cols);
    const auto meet = gf2::row_space_intersection_basis(a, b);
    EXPECT_EQ(gf2::rank(a) + gf2::rank(b), gf2::row_space_sum_dim(a, b) + meet.row_count());
    EXPECT_TRUE(gf2::row_space_contains(a, meet));
    EXPECT_TRUE(gf2::row_space_contains(b, meet));
  }
}

TEST(Properties, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(14);
  std::set<std::size_t> genera;
  for (int t = 0; t < 150; ++t) {
    const auto g = random_embedded_graph(rng, {6, 10, false});
    genera.insert(g.genus());
    for (const auto& c : check_invariants(g, {10, 10, 2, static_cast<std::uint64_t>(t)}))
      EXPECT_TRUE(c.ok) << c.id << ": " << c.detail << "\n" << format_rotation_system(g);
  }
  EXPECT_GE(genera.size(), 3u);
}

TEST(Properties, PlaneGeneratorStaysOnTheSphere) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) EXPECT_EQ(random_embedded_graph(rng, {7, 12, true}).genus(), 0u);
}

TEST(Properties, OrbitsAgreeWithSignatures) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_embedded_graph(rng, {5, 9, false});
    const auto w = random_vector(rng, g.edge_count());
    const auto orbit = orbit_of(g, w);
    EXPECT_EQ(BigInt(orbit.size()) * class_count_direct(g), pow2(g.edge_count()));
    for (int s = 0; s < 20; ++s) {
      const auto v = random_vector(rng, g.edge_count());
      EXPECT_EQ(std::binary_search(orbit.begin(), orbit.end(), v), same_class(g, w, v));
    }
  }
}

TEST(Properties, DualOfDualRestoresIncidence) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_embedded_graph(rng, {6, 12, false});
    const auto dd = dual(dual(g));
    EXPECT_EQ(testing_helpers::sorted_rows(incidence_matrix(dd)), testing_helpers::sorted_rows(incidence_matrix(g)));
    EXPECT_EQ(dd.genus(), g.genus());
  }
}

TEST(Properties, FormatRoundTrip) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_embedded_graph(rng, {6, 12, false});
    const std::string text = format_rotation_system(g);
    EXPECT_EQ(format_rotation_system(parse_graph(text)), text);
  }
}
