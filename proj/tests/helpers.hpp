#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "edgegame/edgegame.hpp"

namespace testing_helpers {

inline std::vector<std::string> sorted_rows(const edgegame::gf2::BitMatrix& m) {
  auto rows = m.row_strings();
  std::sort(rows.begin(), rows.end());
  return rows;
}

inline std::vector<std::string> sorted_rows(const std::vector<edgegame::gf2::BitVector>& vs) {
  std::vector<std::string> rows;
  for (const auto& v : vs) rows.push_back(v.to_string());
  std::sort(rows.begin(), rows.end());
  return rows;
}

inline edgegame::gf2::BitMatrix matrix(const std::vector<std::string>& rows) {
  return edgegame::gf2::BitMatrix::from_strings(rows, rows.empty() ? 0 : rows.front().size());
}

// (coefficient, x, y, z)
using Term = std::tuple<long, unsigned, unsigned, unsigned>;

inline edgegame::TrivariatePolynomial polynomial(const std::vector<Term>& terms) {
  edgegame::TrivariatePolynomial p;
  for (const auto& [c, x, y, z] : terms) p.add({x, y, z}, edgegame::BigInt(c));
  return p;
}

// BRT of the tic-tac-toe torus graph, reference values.
inline edgegame::TrivariatePolynomial tictactoe_brt() {
  return polynomial({{1, 3, 0, 0}, {4, 2, 1, 0}, {9, 2, 0, 0}, {6, 1, 2, 0}, {36, 1, 1, 0}, {32, 1, 0, 0},
                     {2, 0, 4, 0}, {16, 0, 3, 0}, {60, 0, 2, 0}, {112, 0, 1, 0}, {48, 0, 0, 0},
                     {2, 1, 3, 1}, {8, 1, 2, 1}, {1, 0, 6, 1}, {9, 0, 5, 1}, {34, 0, 4, 1}, {68, 0, 3, 1},
                     {64, 0, 2, 1}});
}

// BRT of the six-vertex torus graph, reference values.
inline edgegame::TrivariatePolynomial six_vertex_brt() {
  return polynomial({{1, 5, 0, 0}, {8, 4, 0, 0}, {28, 3, 0, 0}, {5, 2, 1, 0}, {56, 2, 0, 0}, {2, 1, 2, 0},
                     {20, 1, 1, 0}, {65, 1, 0, 0}, {1, 0, 3, 1}, {4, 0, 2, 1}, {4, 0, 2, 0}, {26, 0, 1, 0},
                     {36, 0, 0, 0}});
}

}  // namespace testing_helpers
