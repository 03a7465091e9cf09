// Counts recoloring classes of a rotation-system file three ways.
//
//   count_classes data/tictactoe_torus.rot

#include <iostream>

#include "edgegame/edgegame.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: count_classes <file.rot>\n";
    return 2;
  }
  try {
    const edgegame::EmbeddedGraph g = edgegame::load_graph(argv[1]);
    std::cout << "genus " << g.genus() << ", " << g.edge_count() << " edges\n";
    std::cout << "direct:   " << edgegame::class_count_direct(g) << '\n';
    std::cout << "homology: " << edgegame::class_count_homology(g) << '\n';
    if (g.edge_count() <= 22) std::cout << "oracle:   " << edgegame::enumerate_classes(g).class_count << '\n';
  } catch (const edgegame::Error& e) {
    std::cerr << e.what() << '\n';
    return static_cast<int>(e.kind());
  }
  return 0;
}
