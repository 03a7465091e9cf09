#pragma once

// Canonical class representatives for plane graphs. The first c-1 medial traces span the
// bicycle space; an edge set S with a triangular pattern against that basis gives a basis
// of GF(2)^|E| / (U + U*), and the 2^(c-1) subset sums of S represent every class once.

#include <cstddef>
#include <set>
#include <vector>

#include "edgegame/embedded_graph.hpp"
#include "edgegame/errors.hpp"
#include "edgegame/gf2.hpp"
#include "edgegame/medial.hpp"
#include "edgegame/spaces.hpp"

namespace edgegame {

struct RepresentativeSet {
  std::vector<std::size_t> edges;          // S
  gf2::BitMatrix basis;                    // reduced basis w_1..w_{c-1}; w_j has a 1 at edges[j], w_k a 0 there
  std::vector<ColorVector> colorings;      // all subset sums of the characteristic vectors of S
};

/// Colorings for every subset of `edges`, in binary counting order over the subset.
inline std::vector<ColorVector> subset_colorings(std::size_t edge_count, const std::vector<std::size_t>& edges) {
  if (edges.size() >= 32) throw CapExceededError("too many representative edges to list");
  std::vector<ColorVector> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edges.size()); ++bits) {
    ColorVector w(edge_count);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((bits >> i) & 1u) w.set(edges[i]);
    out.push_back(std::move(w));
  }
  return out;
}

inline RepresentativeSet planar_representatives(const EmbeddedGraph& g) {
  if (g.genus() != 0)
    throw UnsupportedError("unsupported: representatives are only defined for plane graphs (genus is " +
                           std::to_string(g.genus()) + ")");
  const SpaceP p = space_P(g);
  check_invariant(gf2::same_row_space(p.basis, bicycle_space(g)),
                  "medial traces do not span the bicycle space of a plane graph");
  const gf2::Echelon e = gf2::rref(p.basis);
  RepresentativeSet rs{e.pivots, e.matrix, subset_colorings(g.edge_count(), e.pivots)};
  return rs;
}

/// True iff the subset sums of `rs.edges` are pairwise inequivalent and as many as there are classes.
inline bool verify_representatives(const EmbeddedGraph& g, const RepresentativeSet& rs) {
  if (g.genus() != 0) throw UnsupportedError("unsupported: representatives are only verified on plane graphs");
  if (rs.edges.size() != class_exponent_direct(g)) return false;
  for (std::size_t j : rs.edges)
    if (j >= g.edge_count()) return false;
  const ClassSignature signature(g);
  std::set<gf2::BitVector> seen;
  for (const auto& w : subset_colorings(g.edge_count(), rs.edges))
    if (!seen.insert(signature(w)).second) return false;
  return true;
}

}  // namespace edgegame
