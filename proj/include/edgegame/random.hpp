#pragma once

// Random connected rotation systems for property tests.
//
// Start from a random tree with random rotations (always plane), then insert extra edges
// one at a time. Each end goes into a corner, i.e. just before some dart in its rotation;
// the corner before dart d lies in the face containing d. Two ends in the same face split
// it (genus unchanged); ends in different faces merge them (genus + 1).

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "edgegame/embedded_graph.hpp"

namespace edgegame {

struct RandomGraphOptions {
  std::size_t max_vertices = 6;
  std::size_t max_edges = 12;
  bool plane = false;  // keep every insertion inside one face
};

namespace detail {

inline void insert_before(RawGraph& raw, std::size_t vertex, DartLabel before, DartLabel dart) {
  auto& rot = raw.rotations[vertex];
  for (auto it = rot.begin(); it != rot.end(); ++it)
    if (*it == before) {
      rot.insert(it, dart);
      return;
    }
  rot.push_back(dart);
}

}  // namespace detail

template <typename Rng>
RawGraph random_rotation_system(Rng& rng, const RandomGraphOptions& options = {}) {
  std::uniform_int_distribution<std::size_t> pick_v(1, std::max<std::size_t>(1, options.max_vertices));
  const std::size_t v = pick_v(rng);
  const std::size_t min_edges = std::max<std::size_t>(1, v - 1);
  const std::size_t max_edges = std::max(min_edges, options.max_edges);
  const std::size_t e = std::uniform_int_distribution<std::size_t>(min_edges, max_edges)(rng);

  RawGraph raw;
  raw.rotations.resize(v);
  DartLabel next = 0;
  for (std::size_t child = 1; child < v; ++child) {
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, child - 1)(rng);
    raw.edges.emplace_back(next, next + 1);
    raw.rotations[parent].push_back(next);
    raw.rotations[child].push_back(next + 1);
    next += 2;
  }
  for (auto& rot : raw.rotations) std::shuffle(rot.begin(), rot.end(), rng);

  while (raw.edges.size() < e) {
    const DartLabel a = next;
    const DartLabel b = next + 1;
    if (raw.edges.empty()) {
      // Single vertex, nothing to anchor on yet: the first loop is plane either way.
      raw.rotations[0] = {a, b};
    } else {
      const EmbeddedGraph g = EmbeddedGraph::from_raw(raw);
      std::uniform_int_distribution<std::size_t> pick_dart(0, g.dart_count() - 1);
      const Dart first = pick_dart(rng);
      Dart second = pick_dart(rng);
      if (options.plane) {
        const auto& face = g.faces().faces[g.faces().face_of_dart[first]];
        second = face[std::uniform_int_distribution<std::size_t>(0, face.size() - 1)(rng)];
      }
      const std::size_t u = g.vertex_of(first);
      const std::size_t w = g.vertex_of(second);
      detail::insert_before(raw, u, g.label(first), a);
      detail::insert_before(raw, w, g.label(second), b);
    }
    raw.edges.emplace_back(a, b);
    next += 2;
  }
  return raw;
}

template <typename Rng>
EmbeddedGraph random_embedded_graph(Rng& rng, const RandomGraphOptions& options = {}) {
  return EmbeddedGraph::from_raw(random_rotation_system(rng, options));
}

}  // namespace edgegame
