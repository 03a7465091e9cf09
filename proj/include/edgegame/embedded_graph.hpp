#pragma once

// Cellularly embedded graphs on closed orientable surfaces, given as rotation systems.
//
// Darts are stored internally as 0..2m-1 with edge j owning darts 2j and 2j+1, so
// the dart involution is d ^ 1. The caller's dart labels are kept for output only.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgegame/errors.hpp"
#include "edgegame/gf2.hpp"

namespace edgegame {

using Dart = std::size_t;
using DartLabel = std::int64_t;

/// Unvalidated graph as read from a file: labelled darts in rotation and edge order.
struct RawGraph {
  std::vector<std::vector<DartLabel>> rotations;
  std::vector<std::pair<DartLabel, DartLabel>> edges;
};

struct FaceSet {
  std::vector<std::vector<Dart>> faces;  // orbits of d -> sigma(alpha(d)), each starting at its smallest dart
  std::vector<std::size_t> face_of_dart;

  std::size_t size() const noexcept { return faces.size(); }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

class EmbeddedGraph {
 public:
  /// Validates a raw rotation system. Throws InputError naming the first defect found.
  static EmbeddedGraph from_raw(const RawGraph& raw) {
    EmbeddedGraph g;
    const std::size_t n = raw.rotations.size();
    const std::size_t m = raw.edges.size();
    if (n == 0) throw InputError("graph must have at least one vertex");

    std::map<DartLabel, Dart> index;
    g.labels_.resize(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto [a, b] = raw.edges[j];
      if (a < 0 || b < 0) throw InputError("dart ids must be non-negative (edge " + std::to_string(j) + ")");
      if (a == b) throw InputError("dart " + std::to_string(a) + " is paired with itself (alpha fixed point)");
      for (auto [label, dart] : {std::pair{a, 2 * j}, std::pair{b, 2 * j + 1}}) {
        if (!index.emplace(label, dart).second)
          throw InputError("duplicate dart " + std::to_string(label) + " in edge list");
        g.labels_[dart] = label;
      }
    }

    g.vertex_of_.assign(2 * m, n);
    g.rotations_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      for (DartLabel label : raw.rotations[v]) {
        auto it = index.find(label);
        if (it == index.end())
          throw InputError("dart " + std::to_string(label) + " at vertex " + std::to_string(v) +
                           " is missing from the edge list");
        if (g.vertex_of_[it->second] != n)
          throw InputError("duplicate dart " + std::to_string(label) + " in rotations");
        g.vertex_of_[it->second] = v;
        g.rotations_[v].push_back(it->second);
      }
    }
    for (Dart d = 0; d < 2 * m; ++d)
      if (g.vertex_of_[d] == n)
        throw InputError("dart " + std::to_string(g.labels_[d]) + " is missing from the rotations");

    g.sigma_.resize(2 * m);
    g.sigma_inv_.resize(2 * m);
    for (const auto& rot : g.rotations_) {
      for (std::size_t i = 0; i < rot.size(); ++i) {
        const Dart next = rot[(i + 1) % rot.size()];
        g.sigma_[rot[i]] = next;
        g.sigma_inv_[next] = rot[i];
      }
    }

    detail::UnionFind uf(n);
    std::size_t parts = n;
    for (std::size_t j = 0; j < m; ++j)
      if (uf.unite(g.vertex_of_[2 * j], g.vertex_of_[2 * j + 1])) --parts;
    if (parts != 1) throw InputError("graph is disconnected (" + std::to_string(parts) + " components)");

    g.faces_ = g.trace_faces_impl();
    const long long twice_genus = 2 - static_cast<long long>(n) + static_cast<long long>(m) -
                                  static_cast<long long>(g.faces_.size());
    check_invariant(twice_genus >= 0 && twice_genus % 2 == 0,
                    "Euler characteristic check failed: 2 - v + e - f = " + std::to_string(twice_genus));
    g.genus_ = static_cast<std::size_t>(twice_genus / 2);
    return g;
  }

  std::size_t vertex_count() const noexcept { return rotations_.size(); }
  std::size_t edge_count() const noexcept { return labels_.size() / 2; }
  std::size_t dart_count() const noexcept { return labels_.size(); }

  static Dart alpha(Dart d) noexcept { return d ^ 1u; }
  static std::size_t edge_of(Dart d) noexcept { return d / 2; }
  static std::pair<Dart, Dart> darts_of(std::size_t edge) noexcept { return {2 * edge, 2 * edge + 1}; }

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  std::size_t vertex_of(Dart d) const { return vertex_of_[d]; }
  DartLabel label(Dart d) const { return labels_[d]; }
  std::span<const Dart> rotation(std::size_t v) const { return rotations_[v]; }

  std::pair<std::size_t, std::size_t> endpoints(std::size_t edge) const {
    return {vertex_of_[2 * edge], vertex_of_[2 * edge + 1]};
  }
  bool is_loop(std::size_t edge) const { return vertex_of_[2 * edge] == vertex_of_[2 * edge + 1]; }

  const FaceSet& faces() const noexcept { return faces_; }
  std::size_t face_count() const noexcept { return faces_.size(); }
  std::size_t genus() const noexcept { return genus_; }

  /// Back to the file-level representation, preserving dart labels and orders.
  RawGraph to_raw() const {
    RawGraph raw;
    for (const auto& rot : rotations_) {
      auto& out = raw.rotations.emplace_back();
      for (Dart d : rot) out.push_back(labels_[d]);
    }
    for (std::size_t j = 0; j < edge_count(); ++j) raw.edges.emplace_back(labels_[2 * j], labels_[2 * j + 1]);
    return raw;
  }

 private:
  EmbeddedGraph() = default;

  FaceSet trace_faces_impl() const {
    FaceSet fs;
    fs.face_of_dart.assign(dart_count(), dart_count());
    for (Dart start = 0; start < dart_count(); ++start) {
      if (fs.face_of_dart[start] != dart_count()) continue;
      auto& orbit = fs.faces.emplace_back();
      for (Dart d = start; fs.face_of_dart[d] == dart_count(); d = sigma_[alpha(d)]) {
        fs.face_of_dart[d] = fs.faces.size() - 1;
        orbit.push_back(d);
      }
    }
    // An edgeless graph (single vertex) bounds one face.
    if (dart_count() == 0) fs.faces.emplace_back();
    return fs;
  }

  std::vector<std::vector<Dart>> rotations_;
  std::vector<DartLabel> labels_;
  std::vector<std::size_t> vertex_of_;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  FaceSet faces_;
  std::size_t genus_ = 0;
};

inline EmbeddedGraph validate(const RawGraph& raw) { return EmbeddedGraph::from_raw(raw); }

inline const FaceSet& trace_faces(const EmbeddedGraph& g) { return g.faces(); }

/// g = (2 - v + e - f) / 2; integrality and sign are checked at construction.
inline std::size_t genus(const EmbeddedGraph& g) { return g.genus(); }

/// The dual map: faces become vertices, rotation at a face follows its boundary walk
/// (sigma* = sigma o alpha), and dual edge j is primal edge j with the same dart labels.
inline EmbeddedGraph dual(const EmbeddedGraph& g) {
  RawGraph raw;
  for (const auto& face : g.faces().faces) {
    auto& rot = raw.rotations.emplace_back();
    for (Dart d : face) rot.push_back(g.label(d));
  }
  for (std::size_t j = 0; j < g.edge_count(); ++j) raw.edges.emplace_back(g.label(2 * j), g.label(2 * j + 1));
  return EmbeddedGraph::from_raw(raw);
}

/// Vertex-edge incidence over GF(2): (v, e) = 1 iff exactly one end of e is at v.
inline gf2::BitMatrix incidence_matrix(const EmbeddedGraph& g) {
  gf2::BitMatrix m(g.vertex_count(), g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const auto [u, w] = g.endpoints(j);
    if (u != w) {
      m.set(u, j);
      m.set(w, j);
    }
  }
  return m;
}

/// Face-edge incidence over GF(2): parity of the number of times e occurs on the boundary walk of f.
inline gf2::BitMatrix dual_incidence_matrix(const EmbeddedGraph& g) {
  const auto& faces = g.faces().faces;
  gf2::BitMatrix m(faces.size(), g.edge_count());
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (Dart d : faces[f]) m.row(f).flip(EmbeddedGraph::edge_of(d));
  return m;
}

/// Counts connected components and faces of spanning sub-ribbons given as edge bitmasks.
/// Rotations are restricted to the darts of the present edges; an isolated vertex bounds one face.
class SubRibbonCounter {
 public:
  explicit SubRibbonCounter(const EmbeddedGraph& g) : g_(&g), next_(g.dart_count()), seen_(g.dart_count()) {
    if (g.edge_count() > 63) throw CapExceededError("sub-ribbon masks support at most 63 edges");
  }

  std::size_t face_count(std::uint64_t mask) {
    const EmbeddedGraph& g = *g_;
    std::size_t faces = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto rot = g.rotation(v);
      Dart first = g.dart_count();
      Dart prev = g.dart_count();
      for (Dart d : rot) {
        if (!present(mask, d)) continue;
        if (prev == g.dart_count()) {
          first = d;
        } else {
          next_[prev] = d;
        }
        prev = d;
      }
      if (prev == g.dart_count()) {
        ++faces;
      } else {
        next_[prev] = first;
      }
    }
    std::fill(seen_.begin(), seen_.end(), 0);
    for (Dart start = 0; start < g.dart_count(); ++start) {
      if (!present(mask, start) || seen_[start]) continue;
      ++faces;
      for (Dart d = start; !seen_[d]; d = next_[EmbeddedGraph::alpha(d)]) seen_[d] = 1;
    }
    return faces;
  }

  std::size_t component_count(std::uint64_t mask) const {
    const EmbeddedGraph& g = *g_;
    detail::UnionFind uf(g.vertex_count());
    std::size_t parts = g.vertex_count();
    for (std::size_t j = 0; j < g.edge_count(); ++j)
      if ((mask >> j) & 1u) {
        const auto [u, w] = g.endpoints(j);
        if (uf.unite(u, w)) --parts;
      }
    return parts;
  }

 private:
  static bool present(std::uint64_t mask, Dart d) { return (mask >> EmbeddedGraph::edge_of(d)) & 1u; }

  const EmbeddedGraph* g_;
  std::vector<Dart> next_;
  std::vector<unsigned char> seen_;
};

inline std::uint64_t edge_mask(const EmbeddedGraph& g, const std::vector<std::size_t>& edges) {
  std::uint64_t mask = 0;
  for (std::size_t j : edges) {
    if (j >= g.edge_count()) throw InputError("edge index " + std::to_string(j) + " out of range");
    mask |= std::uint64_t{1} << j;
  }
  return mask;
}

inline std::size_t sub_ribbon_face_count(const EmbeddedGraph& g, const std::vector<std::size_t>& edge_subset) {
  SubRibbonCounter counter(g);
  return counter.face_count(edge_mask(g, edge_subset));
}

}  // namespace edgegame
