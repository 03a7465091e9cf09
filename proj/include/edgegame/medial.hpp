#pragma once

// Straight-ahead strands of the medial graph.
//
// A strand runs through corners of the embedding. State (d, ccw) means the strand is
// passing the corner from dart d to sigma(d); state (d, cw) the corner from d to
// sigma^-1(d). At the midpoint of the edge it reaches, the strand crosses over to the
// far endpoint and the opposite side of the edge, which flips the turning direction:
//
//   (d, ccw) -> (alpha(sigma(d)), cw)        crossing edge(sigma(d))
//   (d, cw)  -> (alpha(sigma^-1(d)), ccw)    crossing edge(sigma^-1(d))
//
// The same strand walked backwards visits (sigma(d), cw) for each (d, ccw) and vice versa.

#include <cstddef>
#include <vector>

#include "edgegame/embedded_graph.hpp"
#include "edgegame/errors.hpp"
#include "edgegame/gf2.hpp"

namespace edgegame {

struct StrandState {
  Dart dart;
  bool clockwise;
};

struct MedialComponents {
  std::size_t count = 0;
  bool edgeless = false;                                // no medial graph at all; count is 0
  std::vector<gf2::BitVector> traces;                   // edge parity along each strand
  std::vector<std::vector<unsigned>> multiplicities;    // raw crossing counts per strand and edge
  std::vector<std::vector<StrandState>> strands;        // the walk, starting at its smallest state

  gf2::BitMatrix trace_matrix(std::size_t edges) const {
    gf2::BitMatrix m(edges);
    for (const auto& t : traces) m.push_row(t);
    return m;
  }
};

inline MedialComponents trace_medial(const EmbeddedGraph& g) {
  MedialComponents mc;
  if (g.edge_count() == 0) {
    mc.edgeless = true;
    return mc;
  }
  const std::size_t darts = g.dart_count();
  // state index: 2 * dart + clockwise
  std::vector<unsigned char> seen(2 * darts, 0);
  const auto crossed = [&](StrandState s) { return s.clockwise ? g.sigma_inv(s.dart) : g.sigma(s.dart); };
  for (std::size_t start = 0; start < 2 * darts; ++start) {
    if (seen[start]) continue;
    std::vector<StrandState> walk;
    std::vector<unsigned> mult(g.edge_count(), 0);
    StrandState s{start / 2, (start & 1u) != 0};
    while (!seen[2 * s.dart + s.clockwise]) {
      seen[2 * s.dart + s.clockwise] = 1;
      walk.push_back(s);
      const Dart next = crossed(s);
      ++mult[EmbeddedGraph::edge_of(next)];
      s = StrandState{EmbeddedGraph::alpha(next), !s.clockwise};
    }
    check_invariant(s.dart == start / 2 && s.clockwise == ((start & 1u) != 0),
                    "medial walk entered a cycle away from its start");
    for (const auto& w : walk) {
      const StrandState rev = w.clockwise ? StrandState{g.sigma_inv(w.dart), false} : StrandState{g.sigma(w.dart), true};
      seen[2 * rev.dart + rev.clockwise] = 1;
    }
    gf2::BitVector parity(g.edge_count());
    for (std::size_t j = 0; j < g.edge_count(); ++j)
      if (mult[j] % 2) parity.set(j);
    mc.traces.push_back(std::move(parity));
    mc.multiplicities.push_back(std::move(mult));
    mc.strands.push_back(std::move(walk));
  }
  mc.count = mc.traces.size();
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    unsigned total = 0;
    for (const auto& m : mc.multiplicities) total += m[j];
    check_invariant(total == 2, "edge " + std::to_string(j) + " is crossed " + std::to_string(total) +
                                    " times by the medial strands (expected 2)");
  }
  return mc;
}

/// The span of the strand traces, with basis v_1..v_{c-1}.
struct SpaceP {
  gf2::BitMatrix basis;

  std::size_t dimension() const noexcept { return basis.row_count(); }
};

inline SpaceP space_P(const MedialComponents& mc, std::size_t edges) {
  if (mc.edgeless) return SpaceP{gf2::BitMatrix(edges)};
  if (mc.count == 0) throw InputError("space P needs at least one medial component");
  SpaceP p{gf2::BitMatrix(edges)};
  for (std::size_t i = 0; i + 1 < mc.count; ++i) p.basis.push_row(mc.traces[i]);
  check_invariant(gf2::rank(p.basis) == mc.count - 1,
                  "medial traces v_1..v_{c-1} are dependent (rank " + std::to_string(gf2::rank(p.basis)) +
                      ", expected " + std::to_string(mc.count - 1) + ")");
  return p;
}

inline SpaceP space_P(const EmbeddedGraph& g) { return space_P(trace_medial(g), g.edge_count()); }

}  // namespace edgegame
