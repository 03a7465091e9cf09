#pragma once

// Brute-force referee: closes every coloring under the two moves by breadth-first search.
// Deliberately uses nothing from the linear-algebra side; the move generators are read
// straight off the rotation system.
//
// Colorings are packed with edge j at bit (m - 1 - j), so numeric order on the packed
// words is lexicographic order on the 0/1 strings.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "edgegame/embedded_graph.hpp"
#include "edgegame/errors.hpp"
#include "edgegame/gf2.hpp"
#include "edgegame/numeric.hpp"

namespace edgegame {

struct OrbitCensus {
  BigInt class_count;
  BigInt orbit_size;
  std::vector<gf2::BitVector> representatives;  // lexicographically smallest member of each class, ascending
};

namespace detail {

inline std::uint32_t pack_bit(std::size_t edges, std::size_t j) { return std::uint32_t{1} << (edges - 1 - j); }

inline std::uint32_t pack(const gf2::BitVector& w) {
  std::uint32_t x = 0;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w.get(j)) x |= pack_bit(w.size(), j);
  return x;
}

inline gf2::BitVector unpack(std::uint32_t x, std::size_t edges) {
  gf2::BitVector w(edges);
  for (std::size_t j = 0; j < edges; ++j)
    if (x & pack_bit(edges, j)) w.set(j);
  return w;
}

// One generator per vertex move and per face move, deduplicated and without the zero move.
inline std::vector<std::uint32_t> move_generators(const EmbeddedGraph& g) {
  const std::size_t m = g.edge_count();
  std::set<std::uint32_t> gens;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::uint32_t x = 0;
    for (Dart d : g.rotation(v)) x ^= pack_bit(m, EmbeddedGraph::edge_of(d));  // a loop cancels itself
    gens.insert(x);
  }
  for (const auto& face : g.faces().faces) {
    std::uint32_t x = 0;
    for (Dart d : face) x ^= pack_bit(m, EmbeddedGraph::edge_of(d));
    gens.insert(x);
  }
  gens.erase(0);
  return {gens.begin(), gens.end()};
}

inline void require_oracle_cap(const EmbeddedGraph& g, std::size_t edge_cap) {
  if (g.edge_count() > edge_cap)
    throw CapExceededError("graph has " + std::to_string(g.edge_count()) + " edges; the brute-force oracle is capped at " +
                           std::to_string(edge_cap));
  if (g.edge_count() > 30) throw CapExceededError("the brute-force oracle supports at most 30 edges");
}

}  // namespace detail

/// BFS closure of {w} under the moves, sorted lexicographically.
inline std::vector<gf2::BitVector> orbit_of(const EmbeddedGraph& g, const gf2::BitVector& w, std::size_t edge_cap = 22) {
  detail::require_oracle_cap(g, edge_cap);
  if (w.size() != g.edge_count()) throw InputError("coloring length does not match the graph");
  const auto gens = detail::move_generators(g);
  std::set<std::uint32_t> seen{detail::pack(w)};
  std::vector<std::uint32_t> frontier{detail::pack(w)};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t x : frontier)
      for (std::uint32_t gen : gens)
        if (seen.insert(x ^ gen).second) next.push_back(x ^ gen);
    frontier.swap(next);
  }
  std::vector<gf2::BitVector> out;
  out.reserve(seen.size());
  for (std::uint32_t x : seen) out.push_back(detail::unpack(x, g.edge_count()));
  return out;
}

/// Sweeps all 2^|E| colorings in lexicographic order, flooding each new orbit.
inline OrbitCensus enumerate_classes(const EmbeddedGraph& g, std::size_t edge_cap = 22) {
  detail::require_oracle_cap(g, edge_cap);
  const std::size_t m = g.edge_count();
  const auto gens = detail::move_generators(g);
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<bool> seen(total, false);
  std::vector<std::uint32_t> stack;
  OrbitCensus census;
  std::uint64_t common_size = 0;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    census.representatives.push_back(detail::unpack(static_cast<std::uint32_t>(start), m));
    std::uint64_t size = 0;
    seen[start] = true;
    stack.assign(1, static_cast<std::uint32_t>(start));
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      ++size;
      for (std::uint32_t gen : gens) {
        const std::uint32_t y = x ^ gen;
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    if (common_size == 0) common_size = size;
    check_invariant(size == common_size, "orbits of different sizes (" + std::to_string(common_size) + " and " +
                                             std::to_string(size) + ")");
  }
  census.class_count = BigInt(census.representatives.size());
  census.orbit_size = BigInt(common_size);
  check_invariant(census.class_count * census.orbit_size == pow2(m), "orbit sizes do not tile all colorings");
  return census;
}

}  // namespace edgegame
