#pragma once

// Text format for rotation systems:
//
//   # comment
//   vertices <n>
//   v <i>: <dart> <dart> ...     (counterclockwise, i = 0..n-1)
//   edges <m>
//   e <j>: <dart> <dart>         (j = 0..m-1; j is the GF(2) coordinate of the edge)

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "edgegame/embedded_graph.hpp"
#include "edgegame/errors.hpp"

namespace edgegame {

namespace detail {

inline std::string trim_comment(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline long long parse_integer(const std::string& token, std::size_t line_no) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size())
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got \"" + token + "\"");
  return value;
}

// "<tag> <index>: <rest>" -> index, rest tokens.
inline std::pair<long long, std::vector<long long>> parse_indexed(const std::string& body, std::size_t line_no) {
  const auto colon = body.find(':');
  if (colon == std::string::npos) throw InputError("line " + std::to_string(line_no) + ": missing ':'");
  std::istringstream head(body.substr(1, colon - 1));
  std::string idx;
  head >> idx;
  std::string extra;
  if (idx.empty() || (head >> extra)) throw InputError("line " + std::to_string(line_no) + ": malformed index");
  const long long index = parse_integer(idx, line_no);
  std::vector<long long> values;
  std::istringstream tail(body.substr(colon + 1));
  for (std::string tok; tail >> tok;) values.push_back(parse_integer(tok, line_no));
  return {index, values};
}

}  // namespace detail

/// Parses the text format into a RawGraph. Structural validation is left to EmbeddedGraph::from_raw.
inline RawGraph parse_rotation_system(std::istream& in) {
  std::optional<std::size_t> n, m;
  RawGraph raw;
  std::vector<bool> have_vertex, have_edge;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = detail::trim_comment(line);
    if (body.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::istringstream words(body);
    std::string keyword;
    words >> keyword;
    if (keyword == "vertices" || keyword == "edges") {
      std::string count, extra;
      words >> count;
      if (count.empty() || (words >> extra)) throw InputError(where + "expected '" + keyword + " <count>'");
      const long long c = detail::parse_integer(count, line_no);
      if (c < 0) throw InputError(where + "negative count");
      if (keyword == "vertices") {
        if (n) throw InputError(where + "repeated 'vertices' header");
        n = static_cast<std::size_t>(c);
        raw.rotations.assign(*n, {});
        have_vertex.assign(*n, false);
      } else {
        if (!n) throw InputError(where + "'edges' header before 'vertices'");
        if (m) throw InputError(where + "repeated 'edges' header");
        m = static_cast<std::size_t>(c);
        raw.edges.assign(*m, {0, 0});
        have_edge.assign(*m, false);
      }
    } else if (body[0] == 'v' && (body.size() == 1 || body[1] == ' ' || body[1] == '\t')) {
      if (!n) throw InputError(where + "vertex line before 'vertices' header");
      if (m) throw InputError(where + "vertex line after 'edges' header");
      auto [index, darts] = detail::parse_indexed(body, line_no);
      if (index < 0 || static_cast<std::size_t>(index) >= *n)
        throw InputError(where + "vertex index " + std::to_string(index) + " out of range");
      if (have_vertex[index]) throw InputError(where + "vertex " + std::to_string(index) + " listed twice");
      have_vertex[index] = true;
      raw.rotations[index].assign(darts.begin(), darts.end());
    } else if (body[0] == 'e' && (body.size() == 1 || body[1] == ' ' || body[1] == '\t')) {
      if (!m) throw InputError(where + "edge line before 'edges' header");
      auto [index, darts] = detail::parse_indexed(body, line_no);
      if (index < 0 || static_cast<std::size_t>(index) >= *m)
        throw InputError(where + "edge index " + std::to_string(index) + " out of range");
      if (have_edge[index]) throw InputError(where + "edge " + std::to_string(index) + " listed twice");
      if (darts.size() != 2) throw InputError(where + "an edge needs exactly two darts");
      have_edge[index] = true;
      raw.edges[index] = {darts[0], darts[1]};
    } else {
      throw InputError(where + "unrecognized line \"" + body + "\"");
    }
  }
  if (!n) throw InputError("missing 'vertices' header");
  if (!m) throw InputError("missing 'edges' header");
  for (std::size_t v = 0; v < *n; ++v)
    if (!have_vertex[v]) throw InputError("vertex " + std::to_string(v) + " has no rotation line");
  for (std::size_t j = 0; j < *m; ++j)
    if (!have_edge[j]) throw InputError("edge " + std::to_string(j) + " has no line");
  return raw;
}

inline EmbeddedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return EmbeddedGraph::from_raw(parse_rotation_system(in));
}

inline EmbeddedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return EmbeddedGraph::from_raw(parse_rotation_system(in));
}

inline std::string format_rotation_system(const RawGraph& raw) {
  std::ostringstream out;
  out << "vertices " << raw.rotations.size() << '\n';
  for (std::size_t v = 0; v < raw.rotations.size(); ++v) {
    out << "v " << v << ':';
    for (auto d : raw.rotations[v]) out << ' ' << d;
    out << '\n';
  }
  out << "edges " << raw.edges.size() << '\n';
  for (std::size_t j = 0; j < raw.edges.size(); ++j)
    out << "e " << j << ": " << raw.edges[j].first << ' ' << raw.edges[j].second << '\n';
  return out.str();
}

inline std::string format_rotation_system(const EmbeddedGraph& g) { return format_rotation_system(g.to_raw()); }

}  // namespace edgegame
