#pragma once

// Tree/co-tree decomposition and the map phi : U^perp -> H_1(surface; GF(2)).
//
// With T a spanning tree of G and C a spanning tree of G* avoiding the duals of T,
// exactly 2g edges are left over. For each leftover e_j, p_j is the cycle of G*
// formed by e_j and the co-tree path between its end faces, and
// phi(u) = (<p_1, u>, ..., <p_2g, u>). Its kernel on U^perp is U*.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "edgegame/embedded_graph.hpp"
#include "edgegame/errors.hpp"
#include "edgegame/gf2.hpp"
#include "edgegame/medial.hpp"
#include "edgegame/numeric.hpp"

namespace edgegame {

struct TreeOptions {
  std::optional<std::vector<std::size_t>> tree;  // replay a given spanning tree T
  std::optional<std::uint64_t> shuffle_seed;     // random tie-breaking instead of lowest edge index
};

struct TreeCotree {
  std::vector<std::size_t> tree_edges;      // T, sorted
  std::vector<std::size_t> cotree_edges;    // C, sorted
  std::vector<std::size_t> leftover_edges;  // the 2g remaining edges, sorted
};

struct HomologyMap {
  std::vector<gf2::BitVector> cycles;  // p_1 .. p_2g
  gf2::BitMatrix incidence;            // rows spanning U, for the domain check

  std::size_t rank() const noexcept { return cycles.size(); }

  gf2::BitMatrix cycle_matrix() const {
    gf2::BitMatrix m(incidence.col_count());
    for (const auto& p : cycles) m.push_row(p);
    return m;
  }
};

namespace detail {

inline std::vector<std::size_t> edge_priority(std::size_t edges, const TreeOptions& options) {
  std::vector<std::size_t> order(edges);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

// BFS spanning forest over `nodes` using the listed edges in the given order.
// Returns the tree edges; `parent_edge[n]` is the edge used to reach n (or npos for the root).
inline std::vector<std::size_t> bfs_tree(std::size_t nodes, const std::vector<std::size_t>& edges,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& ends,
                                         std::vector<std::size_t>* parent_edge = nullptr) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> adjacent(nodes);
  for (std::size_t j : edges)
    if (ends[j].first != ends[j].second) {
      adjacent[ends[j].first].push_back(j);
      adjacent[ends[j].second].push_back(j);
    }
  std::vector<std::size_t> parent(nodes, npos);
  std::vector<bool> reached(nodes, false);
  std::vector<std::size_t> used;
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const std::size_t n = queue.front();
    queue.pop_front();
    for (std::size_t j : adjacent[n]) {
      const std::size_t other = ends[j].first == n ? ends[j].second : ends[j].first;
      if (reached[other]) continue;
      reached[other] = true;
      parent[other] = j;
      used.push_back(j);
      queue.push_back(other);
    }
  }
  if (parent_edge) *parent_edge = std::move(parent);
  return used;
}

inline std::vector<std::pair<std::size_t, std::size_t>> face_ends(const EmbeddedGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> ends(g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j)
    ends[j] = {g.faces().face_of_dart[2 * j], g.faces().face_of_dart[2 * j + 1]};
  return ends;
}

inline std::vector<std::pair<std::size_t, std::size_t>> vertex_ends(const EmbeddedGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> ends(g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) ends[j] = g.endpoints(j);
  return ends;
}

}  // namespace detail

inline TreeCotree tree_cotree(const EmbeddedGraph& g, const TreeOptions& options = {}) {
  const std::size_t m = g.edge_count();
  const auto order = detail::edge_priority(m, options);
  TreeCotree tc;
  std::vector<bool> in_tree(m, false);

  if (options.tree) {
    detail::UnionFind uf(g.vertex_count());
    for (std::size_t j : *options.tree) {
      if (j >= m) throw InputError("tree edge " + std::to_string(j) + " out of range");
      if (in_tree[j]) throw InputError("tree edge " + std::to_string(j) + " listed twice");
      const auto [u, w] = g.endpoints(j);
      if (!uf.unite(u, w)) throw InputError("given tree edges contain a cycle (edge " + std::to_string(j) + ")");
      in_tree[j] = true;
    }
    if (options.tree->size() + 1 != g.vertex_count())
      throw InputError("given tree has " + std::to_string(options.tree->size()) + " edges; a spanning tree needs " +
                       std::to_string(g.vertex_count() - 1));
  } else {
    for (std::size_t j : detail::bfs_tree(g.vertex_count(), order, detail::vertex_ends(g))) in_tree[j] = true;
  }
  check_invariant(static_cast<std::size_t>(std::count(in_tree.begin(), in_tree.end(), true)) + 1 == g.vertex_count(),
                  "spanning tree of G does not reach every vertex");

  std::vector<std::size_t> dual_candidates;
  for (std::size_t j : order)
    if (!in_tree[j]) dual_candidates.push_back(j);
  std::vector<bool> in_cotree(m, false);
  for (std::size_t j : detail::bfs_tree(g.face_count(), dual_candidates, detail::face_ends(g))) in_cotree[j] = true;
  check_invariant(static_cast<std::size_t>(std::count(in_cotree.begin(), in_cotree.end(), true)) + 1 == g.face_count(),
                  "co-tree does not span the dual graph (embedding is not cellular?)");

  for (std::size_t j = 0; j < m; ++j) {
    if (in_tree[j]) {
      tc.tree_edges.push_back(j);
    } else if (in_cotree[j]) {
      tc.cotree_edges.push_back(j);
    } else {
      tc.leftover_edges.push_back(j);
    }
  }
  check_invariant(tc.leftover_edges.size() == 2 * g.genus(),
                  "tree/co-tree leaves " + std::to_string(tc.leftover_edges.size()) + " edges, expected 2g = " +
                      std::to_string(2 * g.genus()));
  return tc;
}

/// p_j: the leftover edge plus the co-tree path joining its two end faces.
inline HomologyMap fundamental_dual_cycles(const EmbeddedGraph& g, const TreeCotree& tc) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const auto ends = detail::face_ends(g);
  std::vector<std::size_t> parent_edge;
  detail::bfs_tree(g.face_count(), tc.cotree_edges, ends, &parent_edge);
  const auto depth_of = [&](std::size_t f) {
    std::size_t d = 0;
    while (parent_edge[f] != npos) {
      const std::size_t j = parent_edge[f];
      f = ends[j].first == f ? ends[j].second : ends[j].first;
      ++d;
    }
    return d;
  };
  const auto step_up = [&](std::size_t f) {
    const std::size_t j = parent_edge[f];
    return ends[j].first == f ? ends[j].second : ends[j].first;
  };

  HomologyMap hm{{}, incidence_matrix(g)};
  for (std::size_t e : tc.leftover_edges) {
    gf2::BitVector p(g.edge_count());
    p.flip(e);
    std::size_t a = ends[e].first;
    std::size_t b = ends[e].second;
    std::size_t da = depth_of(a);
    std::size_t db = depth_of(b);
    while (da > db) {
      p.flip(parent_edge[a]);
      a = step_up(a);
      --da;
    }
    while (db > da) {
      p.flip(parent_edge[b]);
      b = step_up(b);
      --db;
    }
    while (a != b) {
      p.flip(parent_edge[a]);
      p.flip(parent_edge[b]);
      a = step_up(a);
      b = step_up(b);
    }
    hm.cycles.push_back(std::move(p));
  }
  return hm;
}

inline HomologyMap homology_map(const EmbeddedGraph& g, const TreeOptions& options = {}) {
  return fundamental_dual_cycles(g, tree_cotree(g, options));
}

/// phi(u) for u in the cycle space of G; anything else is rejected.
inline gf2::BitVector phi(const HomologyMap& hm, const gf2::BitVector& u) {
  if (u.size() != hm.incidence.col_count()) throw InputError("phi: vector length does not match the edge count");
  for (const auto& row : hm.incidence.rows())
    if (row.dot(u)) throw InputError("phi is only defined on the cycle space; " + u.to_string() + " is not a cycle");
  gf2::BitVector out(hm.cycles.size());
  for (std::size_t j = 0; j < hm.cycles.size(); ++j)
    if (hm.cycles[j].dot(u)) out.set(j);
  return out;
}

/// Image of the P basis: row i is phi(v_i).
inline gf2::BitMatrix phi_image(const HomologyMap& hm, const SpaceP& p) {
  gf2::BitMatrix image(hm.cycles.size());
  for (const auto& v : p.basis.rows()) image.push_row(phi(hm, v));
  return image;
}

/// ker(phi restricted to P), as vectors in edge coordinates (reduced echelon form).
inline gf2::BitMatrix phi_kernel_on_P(const HomologyMap& hm, const SpaceP& p) {
  const gf2::BitMatrix image = phi_image(hm, p);
  const gf2::BitMatrix coefficients = gf2::kernel_basis(image.transpose());
  gf2::BitMatrix kernel(p.basis.col_count());
  for (const auto& lambda : coefficients.rows()) {
    gf2::BitVector u(p.basis.col_count());
    for (std::size_t i = lambda.find_first(); i < lambda.size(); i = lambda.find_next(i + 1)) u ^= p.basis.row(i);
    kernel.push_row(std::move(u));
  }
  return gf2::rref(kernel).matrix;
}

inline std::size_t kernel_dim_on_P(const HomologyMap& hm, const SpaceP& p) {
  return p.dimension() - gf2::rank(phi_image(hm, p));
}

inline std::size_t kernel_dim_on_P(const EmbeddedGraph& g, const TreeOptions& options = {}) {
  return kernel_dim_on_P(homology_map(g, options), space_P(g));
}

/// 2^(2g + b) with b = dim ker(phi|_P).
inline BigInt class_count_homology(const EmbeddedGraph& g, const TreeOptions& options = {}) {
  return pow2(2 * g.genus() + kernel_dim_on_P(g, options));
}

/// phi*: the same construction with G and G* exchanged; defined on the cycle space of G*.
inline HomologyMap dual_homology_map(const EmbeddedGraph& g, const TreeOptions& options = {}) {
  TreeOptions dual_options;
  dual_options.shuffle_seed = options.shuffle_seed;
  return homology_map(dual(g), dual_options);
}

struct HomologyReport {
  TreeCotree decomposition;
  HomologyMap map;
  SpaceP p;
  gf2::BitMatrix image;  // phi applied to the P basis
  std::size_t kernel_dim = 0;
  std::size_t class_exponent = 0;
  BigInt class_count;
};

inline HomologyReport analyze_homology(const EmbeddedGraph& g, const TreeOptions& options = {}) {
  HomologyReport r{tree_cotree(g, options), {}, space_P(g), {}, 0, 0, 0};
  r.map = fundamental_dual_cycles(g, r.decomposition);
  r.image = phi_image(r.map, r.p);
  r.kernel_dim = r.p.dimension() - gf2::rank(r.image);
  r.class_exponent = 2 * g.genus() + r.kernel_dim;
  r.class_count = pow2(r.class_exponent);
  return r;
}

}  // namespace edgegame
