#pragma once

// Built-in fixtures. Each string is the verbatim contents of data/<name>.rot;
// tests/test_fixtures.cpp keeps the two in sync.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "edgegame/embedded_graph.hpp"
#include "edgegame/format.hpp"

namespace edgegame::fixtures {

struct Fixture {
  std::string_view name;
  std::string_view text;
};

inline constexpr std::string_view tictactoe_torus_text = R"rot(# Tic-tac-toe graph on the square torus: 4 vertices, 9 edges, 5 faces, genus 1.
# Vertices at (2,2), (4,2), (4,4), (2,4) of a 6x6 square with opposite sides glued.
# Edges 0-3 form the inner square, 4-7 wrap around the torus, 8 is the diagonal.
# Darts are listed counterclockwise as drawn; dart 2j is the first listed end of edge j.
vertices 4
v 0: 1 16 2 12 8
v 1: 13 7 0 10
v 2: 15 11 5 17 6
v 3: 4 9 14 3
edges 9
e 0: 0 1
e 1: 2 3
e 2: 4 5
e 3: 6 7
e 4: 8 9
e 5: 10 11
e 6: 12 13
e 7: 14 15
e 8: 16 17
)rot";

inline constexpr std::string_view six_vertex_torus_text = R"rot(# Six vertices and eight edges on the torus: a 4-cycle (edges 0-3) with two pendant
# paths (edges 4-5 and 6-7) that close up around the two directions of the torus.
# 2 faces, genus 1. Darts are listed counterclockwise as drawn.
vertices 6
v 0: 0 11 7
v 1: 12 1 2
v 2: 8 3 4
v 3: 5 6 15
v 4: 10 9
v 5: 14 13
edges 8
e 0: 0 1
e 1: 2 3
e 2: 4 5
e 3: 6 7
e 4: 8 9
e 5: 10 11
e 6: 12 13
e 7: 14 15
)rot";

inline constexpr std::string_view triangles_digon_plane_text = R"rot(# Plane graph: two triangles sharing an edge, plus a doubled edge to a fifth vertex.
# 5 vertices, 7 edges, 4 faces; its medial link has three components.
vertices 5
v 0: 5 0
v 1: 6 2 1
v 2: 9 4 3
v 3: 10 13 8 7
v 4: 11 12
edges 7
e 0: 0 1
e 1: 2 3
e 2: 4 5
e 3: 6 7
e 4: 8 9
e 5: 10 11
e 6: 12 13
)rot";

inline constexpr std::string_view rose_torus_text = R"rot(# Two loops at one vertex with interleaved ends (rotation a1 b1 a2 b2): the standard
# one-vertex embedding of the torus. 1 face, genus 1.
vertices 1
v 0: 0 2 1 3
edges 2
e 0: 0 1
e 1: 2 3
)rot";

inline constexpr std::string_view single_vertex_text = R"rot(# One vertex, no edges: the sphere with a single face.
vertices 1
v 0:
edges 0
)rot";

inline constexpr std::string_view single_edge_text = R"rot(# A single bridge on the sphere.
vertices 2
v 0: 0
v 1: 1
edges 1
e 0: 0 1
)rot";

inline constexpr std::string_view plane_loop_text = R"rot(# A single loop on the sphere: 2 faces.
vertices 1
v 0: 0 1
edges 1
e 0: 0 1
)rot";

inline constexpr std::string_view digon_text = R"rot(# Two parallel edges between two vertices on the sphere.
vertices 2
v 0: 0 2
v 1: 3 1
edges 2
e 0: 0 1
e 1: 2 3
)rot";

inline constexpr std::string_view path3_text = R"rot(# Path on three vertices (a tree).
vertices 3
v 0: 0
v 1: 1 2
v 2: 3
edges 2
e 0: 0 1
e 1: 2 3
)rot";

inline constexpr std::string_view square_text = R"rot(# 4-cycle on the sphere.
vertices 4
v 0: 0 7
v 1: 2 1
v 2: 4 3
v 3: 6 5
edges 4
e 0: 0 1
e 1: 2 3
e 2: 4 5
e 3: 6 7
)rot";

inline constexpr std::array<Fixture, 10> all = {{
    {"tictactoe_torus", tictactoe_torus_text},
    {"six_vertex_torus", six_vertex_torus_text},
    {"triangles_digon_plane", triangles_digon_plane_text},
    {"rose_torus", rose_torus_text},
    {"single_vertex", single_vertex_text},
    {"single_edge", single_edge_text},
    {"plane_loop", plane_loop_text},
    {"digon", digon_text},
    {"path3", path3_text},
    {"square", square_text},
}};

inline EmbeddedGraph load(std::string_view name) {
  for (const auto& f : all)
    if (f.name == name) return parse_graph(f.text);
  throw InputError("no built-in fixture named \"" + std::string(name) + "\"");
}

inline EmbeddedGraph tictactoe_torus() { return parse_graph(tictactoe_torus_text); }
inline EmbeddedGraph six_vertex_torus() { return parse_graph(six_vertex_torus_text); }
inline EmbeddedGraph triangles_digon_plane() { return parse_graph(triangles_digon_plane_text); }
inline EmbeddedGraph rose_torus() { return parse_graph(rose_torus_text); }

}  // namespace edgegame::fixtures
