#pragma once

// The linear structure of the recoloring game. A coloring is a vector in GF(2)^|E|;
// a vertex move adds a row of the incidence matrix (cocycle space U), a face move adds
// a row of the dual incidence matrix (U*). Classes are the cosets of U + U*.

#include <cstddef>
#include <optional>
#include <string>

#include "edgegame/embedded_graph.hpp"
#include "edgegame/errors.hpp"
#include "edgegame/gf2.hpp"
#include "edgegame/numeric.hpp"

namespace edgegame {

/// Coordinate j is the color of edge j.
using ColorVector = gf2::BitVector;

inline void require_coloring(const EmbeddedGraph& g, const ColorVector& w) {
  if (w.size() != g.edge_count())
    throw InputError("coloring has length " + std::to_string(w.size()) + " but the graph has " +
                     std::to_string(g.edge_count()) + " edges");
}

inline ColorVector parse_coloring(const EmbeddedGraph& g, std::string_view bits) {
  ColorVector w = ColorVector::from_string(bits);
  require_coloring(g, w);
  return w;
}

inline gf2::BitMatrix cocycle_space(const EmbeddedGraph& g) { return incidence_matrix(g); }

inline gf2::BitMatrix dual_cocycle_space(const EmbeddedGraph& g) { return dual_incidence_matrix(g); }

inline gf2::BitMatrix cycle_space(const EmbeddedGraph& g) { return gf2::kernel_basis(incidence_matrix(g)); }

/// Cycle space of the dual, (U*)^perp.
inline gf2::BitMatrix dual_cycle_space(const EmbeddedGraph& g) { return gf2::kernel_basis(dual_incidence_matrix(g)); }

/// U ∩ U^perp.
inline gf2::BitMatrix bicycle_space(const EmbeddedGraph& g) {
  return gf2::row_space_intersection_basis(incidence_matrix(g), cycle_space(g));
}

inline ColorVector apply_vertex_move(const EmbeddedGraph& g, ColorVector w, std::size_t vertex) {
  require_coloring(g, w);
  if (vertex >= g.vertex_count())
    throw InputError("vertex " + std::to_string(vertex) + " out of range (" + std::to_string(g.vertex_count()) +
                     " vertices)");
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const auto [u, x] = g.endpoints(j);
    if ((u == vertex) != (x == vertex)) w.flip(j);
  }
  return w;
}

inline ColorVector apply_face_move(const EmbeddedGraph& g, ColorVector w, std::size_t face) {
  require_coloring(g, w);
  if (face >= g.face_count())
    throw InputError("face " + std::to_string(face) + " out of range (" + std::to_string(g.face_count()) +
                     " faces)");
  for (Dart d : g.faces().faces[face]) w.flip(EmbeddedGraph::edge_of(d));
  return w;
}

/// The stacked generators of U + U*.
inline gf2::BitMatrix move_space(const EmbeddedGraph& g) {
  return gf2::stack(incidence_matrix(g), dual_incidence_matrix(g));
}

/// log2 of the number of classes: |E| - dim(U + U*).
inline std::size_t class_exponent_direct(const EmbeddedGraph& g) {
  return g.edge_count() - gf2::row_space_sum_dim(incidence_matrix(g), dual_incidence_matrix(g));
}

inline BigInt class_count_direct(const EmbeddedGraph& g) { return pow2(class_exponent_direct(g)); }

inline bool same_class(const EmbeddedGraph& g, const ColorVector& a, const ColorVector& b) {
  require_coloring(g, a);
  require_coloring(g, b);
  return gf2::in_row_space(move_space(g), a ^ b);
}

/// Complete class invariant: inner products with a fixed basis of (U + U*)^perp = U^perp ∩ (U*)^perp.
/// The basis is the reduced echelon form of that intersection, so signatures are reproducible.
class ClassSignature {
 public:
  explicit ClassSignature(const EmbeddedGraph& g)
      : edges_(g.edge_count()), basis_(gf2::row_space_intersection_basis(cycle_space(g), dual_cycle_space(g))) {}

  const gf2::BitMatrix& basis() const noexcept { return basis_; }
  std::size_t length() const noexcept { return basis_.row_count(); }

  gf2::BitVector operator()(const ColorVector& w) const {
    if (w.size() != edges_) throw InputError("coloring length does not match the graph");
    gf2::BitVector s(basis_.row_count());
    for (std::size_t i = 0; i < basis_.row_count(); ++i)
      if (basis_.row(i).dot(w)) s.set(i);
    return s;
  }

 private:
  std::size_t edges_;
  gf2::BitMatrix basis_;
};

inline gf2::BitVector class_signature(const EmbeddedGraph& g, const ColorVector& w) {
  require_coloring(g, w);
  return ClassSignature(g)(w);
}

inline bool face_touches_vertex(const EmbeddedGraph& g, std::size_t face, std::size_t vertex) {
  if (g.edge_count() == 0) return face == 0 && vertex == 0;
  for (Dart d : g.rotation(vertex))
    if (g.faces().face_of_dart[d] == face) return true;
  return false;
}

/// Incidence rows without v0 stacked over dual incidence rows without f0; f0 must touch v0.
inline gf2::BitMatrix bot_matrix(const EmbeddedGraph& g, std::size_t v0, std::size_t f0) {
  if (v0 >= g.vertex_count()) throw InputError("vertex " + std::to_string(v0) + " out of range");
  if (f0 >= g.face_count()) throw InputError("face " + std::to_string(f0) + " out of range");
  if (!face_touches_vertex(g, f0, v0))
    throw InputError("face " + std::to_string(f0) + " is not incident to vertex " + std::to_string(v0));
  return gf2::stack(incidence_matrix(g).without_row(v0), dual_incidence_matrix(g).without_row(f0));
}

/// Lowest face incident to vertex v0.
inline std::size_t first_incident_face(const EmbeddedGraph& g, std::size_t v0) {
  std::size_t best = g.face_count();
  for (Dart d : g.rotation(v0)) best = std::min(best, g.faces().face_of_dart[d]);
  return best == g.face_count() ? 0 : best;
}

inline gf2::BitMatrix bot_matrix(const EmbeddedGraph& g) { return bot_matrix(g, 0, first_incident_face(g, 0)); }

struct SpaceSummary {
  std::size_t edges = 0;
  std::size_t dim_U = 0;
  std::size_t dim_U_star = 0;
  std::size_t dim_U_perp = 0;
  std::size_t dim_sum = 0;           // dim(U + U*)
  std::size_t dim_U_cap_U_star = 0;
  std::size_t bicycle_dim = 0;       // dim(U ∩ U^perp)
  std::size_t genus = 0;
  std::size_t class_exponent = 0;
  BigInt class_count;
};

inline SpaceSummary summarize(const EmbeddedGraph& g) {
  const auto inc = incidence_matrix(g);
  const auto dinc = dual_incidence_matrix(g);
  SpaceSummary s;
  s.edges = g.edge_count();
  s.dim_U = gf2::rank(inc);
  s.dim_U_star = gf2::rank(dinc);
  s.dim_U_perp = g.edge_count() - s.dim_U;
  s.dim_sum = gf2::row_space_sum_dim(inc, dinc);
  s.dim_U_cap_U_star = gf2::row_space_intersection_basis(inc, dinc).row_count();
  s.bicycle_dim = bicycle_space(g).row_count();
  s.genus = g.genus();
  s.class_exponent = g.edge_count() - s.dim_sum;
  s.class_count = pow2(s.class_exponent);
  check_invariant(s.dim_sum == s.dim_U + s.dim_U_star - s.dim_U_cap_U_star, "dim(U+U*) identity violated");
  check_invariant(s.class_exponent == 2 * s.genus + s.dim_U_cap_U_star, "|E| - dim(U+U*) != 2g + dim(U∩U*)");
  return s;
}

}  // namespace edgegame
