#pragma once

// Command-line front end. Kept in a header so the test suite can drive it in-process.

#include <cstddef>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgegame/edgegame.hpp"

namespace edgegame::cli {

using nlohmann::json;

struct Request {
  std::string input;
  std::string fixture;
  bool json_output = false;
  std::string method = "direct";
  std::size_t oracle_cap = 22;
  std::size_t brt_cap = 26;
  std::vector<std::string> eval;
  std::vector<std::size_t> tree;
  std::string coloring;
  std::string a;
  std::string b;
  std::optional<std::size_t> vertex;
  std::optional<std::size_t> face;
  bool reps = false;
};

namespace detail {

inline json strings(const gf2::BitMatrix& m) { return m.row_strings(); }

inline json strings(const std::vector<gf2::BitVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

inline std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline EmbeddedGraph load_input(const Request& r) {
  if (!r.fixture.empty()) return fixtures::load(r.fixture);
  if (r.input.empty()) throw InputError("no input: pass a rotation-system file or --fixture <name>");
  return load_graph(r.input);
}

inline void print_rows(std::ostream& out, const gf2::BitMatrix& m, const std::string& indent = "  ") {
  for (const auto& row : m.rows()) out << indent << row.to_string() << '\n';
}

}  // namespace detail

inline int cmd_info(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  const SpaceSummary s = summarize(g);
  if (r.json_output) {
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["faces"] = g.face_count();
    j["genus"] = g.genus();
    j["dim_U"] = s.dim_U;
    j["dim_U_star"] = s.dim_U_star;
    j["dim_U_perp"] = s.dim_U_perp;
    j["dim_U_cap_U_star"] = s.dim_U_cap_U_star;
    j["dim_U_plus_U_star"] = s.dim_sum;
    j["bicycle_dim"] = s.bicycle_dim;
    j["class_count"] = s.class_count.str();
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "vertices        " << g.vertex_count() << '\n'
      << "edges           " << g.edge_count() << '\n'
      << "faces           " << g.face_count() << '\n'
      << "genus           " << g.genus() << '\n'
      << "dim U           " << s.dim_U << '\n'
      << "dim U*          " << s.dim_U_star << '\n'
      << "dim U^perp      " << s.dim_U_perp << '\n'
      << "dim U cap U*    " << s.dim_U_cap_U_star << '\n'
      << "dim U + U*      " << s.dim_sum << '\n'
      << "bicycle dim     " << s.bicycle_dim << '\n'
      << "classes         " << s.class_count.str() << '\n';
  return 0;
}

inline int cmd_dual(const Request& r, std::ostream& out) {
  const EmbeddedGraph d = dual(detail::load_input(r));
  if (r.json_output) {
    out << json{{"rotation_system", format_rotation_system(d)}}.dump(2) << '\n';
  } else {
    out << format_rotation_system(d);
  }
  return 0;
}

inline int cmd_count(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  TreeOptions tree;
  if (!r.tree.empty()) tree.tree = r.tree;
  std::vector<std::pair<std::string, BigInt>> results;
  const bool all = r.method == "all";
  if (all || r.method == "direct") results.emplace_back("direct", class_count_direct(g));
  if (all || r.method == "homology") results.emplace_back("homology", class_count_homology(g, tree));
  if (all || r.method == "oracle") results.emplace_back("oracle", enumerate_classes(g, r.oracle_cap).class_count);
  bool agree = true;
  for (const auto& [name, n] : results) agree = agree && n == results.front().second;
  if (r.json_output) {
    json j;
    for (const auto& [name, n] : results) j["counts"][name] = n.str();
    if (all) j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [name, n] : results) out << name << std::string(10 - name.size(), ' ') << n.str() << '\n';
    if (all) out << "agreement " << (agree ? "OK" : "FAILED") << '\n';
  }
  return agree ? 0 : 1;
}

inline int cmd_medial(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  const MedialComponents mc = trace_medial(g);
  if (r.json_output) {
    json j;
    j["components"] = mc.count;
    j["edgeless"] = mc.edgeless;
    j["traces"] = detail::strings(mc.traces);
    out << j.dump(2) << '\n';
  } else {
    out << "components " << mc.count << (mc.edgeless ? " (edgeless graph)" : "") << '\n';
    for (const auto& t : mc.traces) out << "  " << t.to_string() << '\n';
  }
  return 0;
}

inline int cmd_brt(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  const TrivariatePolynomial p = brt_polynomial(g, {r.brt_cap, 0});
  std::optional<Rational> value;
  if (!r.eval.empty()) {
    if (r.eval.size() != 3) throw InputError("--eval takes three values x y z");
    value = p.evaluate(parse_rational(r.eval[0]), parse_rational(r.eval[1]), parse_rational(r.eval[2]));
  }
  if (r.json_output) {
    json j;
    j["polynomial"] = p.to_string();
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"x", m.x}, {"y", m.y}, {"z", m.z}, {"coefficient", c.str()}});
    j["terms"] = terms;
    if (value) j["value"] = to_string(*value);
    out << j.dump(2) << '\n';
  } else if (value) {
    out << to_string(*value) << '\n';
  } else {
    out << p.to_string() << '\n';
  }
  return 0;
}

inline int cmd_tutte(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  if (r.eval.size() != 2) throw InputError("tutte needs --eval x y");
  const Rational x = parse_rational(r.eval[0]);
  const Rational y = parse_rational(r.eval[1]);
  const Rational via_brt = tutte_eval(g, x, y, {r.brt_cap, 0});
  const Rational via_rank = tutte_by_rank_oracle(g, x, y, r.brt_cap);
  if (r.json_output) {
    out << json{{"value", to_string(via_brt)}, {"rank_oracle", to_string(via_rank)}, {"agree", via_brt == via_rank}}.dump(2)
        << '\n';
  } else {
    out << to_string(via_brt) << '\n';
    if (via_brt != via_rank) out << "rank oracle disagrees: " << to_string(via_rank) << '\n';
  }
  return via_brt == via_rank ? 0 : 1;
}

inline int cmd_homology(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  TreeOptions tree;
  if (!r.tree.empty()) tree.tree = r.tree;
  const HomologyReport h = analyze_homology(g, tree);
  if (r.json_output) {
    json j;
    j["genus"] = g.genus();
    j["tree"] = h.decomposition.tree_edges;
    j["cotree"] = h.decomposition.cotree_edges;
    j["leftover"] = h.decomposition.leftover_edges;
    j["cycles"] = detail::strings(h.map.cycles);
    j["P_basis"] = detail::strings(h.p.basis);
    j["phi_image"] = detail::strings(h.image);
    j["b"] = h.kernel_dim;
    j["class_count"] = h.class_count.str();
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "genus     " << g.genus() << '\n'
      << "tree      " << detail::join(h.decomposition.tree_edges) << '\n'
      << "cotree    " << detail::join(h.decomposition.cotree_edges) << '\n'
      << "leftover  " << detail::join(h.decomposition.leftover_edges) << '\n'
      << "cycles p_j\n";
  for (const auto& p : h.map.cycles) out << "  " << p.to_string() << '\n';
  out << "P basis\n";
  detail::print_rows(out, h.p.basis);
  out << "phi(P)\n";
  detail::print_rows(out, h.image);
  out << "b         " << h.kernel_dim << '\n' << "classes   " << h.class_count.str() << '\n';
  return 0;
}

inline int cmd_reps(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  const RepresentativeSet rs = planar_representatives(g);
  const bool ok = verify_representatives(g, rs);
  if (r.json_output) {
    out << json{{"edges", rs.edges}, {"colorings", detail::strings(rs.colorings)}, {"verified", ok}}.dump(2) << '\n';
  } else {
    out << "S " << detail::join(rs.edges) << '\n';
    for (const auto& w : rs.colorings) out << w.to_string() << '\n';
    out << "verified " << (ok ? "yes" : "NO") << '\n';
  }
  return ok ? 0 : 1;
}

inline int cmd_signature(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  const gf2::BitVector s = class_signature(g, parse_coloring(g, r.coloring));
  if (r.json_output) {
    out << json{{"signature", s.to_string()}}.dump(2) << '\n';
  } else {
    out << s.to_string() << '\n';
  }
  return 0;
}

inline int cmd_same_class(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  const bool same = same_class(g, parse_coloring(g, r.a), parse_coloring(g, r.b));
  if (r.json_output) {
    out << json{{"same_class", same}}.dump(2) << '\n';
  } else {
    out << (same ? "true" : "false") << '\n';
  }
  return 0;
}

inline int cmd_bot(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  const std::size_t v0 = r.vertex.value_or(0);
  const std::size_t f0 = r.face ? *r.face : first_incident_face(g, v0);
  const gf2::BitMatrix a = bot_matrix(g, v0, f0);
  const std::size_t rk = gf2::rank(a);
  if (r.json_output) {
    out << json{{"vertex", v0}, {"face", f0}, {"rows", detail::strings(a)}, {"rank", rk}}.dump(2) << '\n';
  } else {
    out << "vertex " << v0 << ", face " << f0 << '\n';
    detail::print_rows(out, a);
    out << "rank " << rk << '\n';
  }
  return 0;
}

inline int cmd_oracle(const Request& r, std::ostream& out) {
  const EmbeddedGraph g = detail::load_input(r);
  const OrbitCensus c = enumerate_classes(g, r.oracle_cap);
  if (r.json_output) {
    json j{{"class_count", c.class_count.str()}, {"orbit_size", c.orbit_size.str()}};
    if (r.reps) j["representatives"] = detail::strings(c.representatives);
    out << j.dump(2) << '\n';
  } else {
    out << "classes    " << c.class_count.str() << '\n' << "orbit size " << c.orbit_size.str() << '\n';
    if (r.reps)
      for (const auto& w : c.representatives) out << w.to_string() << '\n';
  }
  return 0;
}

inline int cmd_selftest(const Request& r, std::ostream& out) {
  bool ok = true;
  json report = json::object();
  for (const auto& f : fixtures::all) {
    const EmbeddedGraph g = parse_graph(f.text);
    const auto checks = check_invariants(g);
    for (const auto& c : checks) {
      ok = ok && c.ok;
      if (r.json_output) {
        report[std::string(f.name)][c.id] = c.ok;
      } else {
        out << (c.ok ? "ok   " : "FAIL ") << f.name << ' ' << c.id;
        if (!c.ok && !c.detail.empty()) out << " (" << c.detail << ')';
        out << '\n';
      }
    }
  }
  if (r.json_output) {
    out << json{{"checks", report}, {"ok", ok}}.dump(2) << '\n';
  } else {
    out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
  }
  return ok ? 0 : 1;
}

/// Parses argv and runs one command. Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence classes of edge bicolorings on embedded graphs"};
  app.require_subcommand(1, 1);
  Request r;
  app.add_flag("--json", r.json_output, "emit a machine-readable JSON document");

  const auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", r.input, "rotation-system file");
    sub->add_option("--fixture", r.fixture, "use a built-in fixture instead of a file");
    sub->add_flag("--json", r.json_output, "emit a machine-readable JSON document");
    return sub;
  };

  auto* info = with_input(app.add_subcommand("info", "vertices, edges, faces, genus and space dimensions"));
  auto* dual_cmd = with_input(app.add_subcommand("dual", "print the dual graph in the same file format"));
  auto* count = with_input(app.add_subcommand("count", "number of equivalence classes"));
  count->add_option("--method", r.method, "direct | homology | oracle | all")
      ->check(CLI::IsMember({"direct", "homology", "oracle", "all"}));
  count->add_option("--oracle-cap", r.oracle_cap, "edge cap for the brute-force oracle");
  count->add_option("--tree", r.tree, "spanning tree edges for the homology route")->delimiter(',');
  auto* medial = with_input(app.add_subcommand("medial", "medial components and their edge traces"));
  auto* brt = with_input(app.add_subcommand("brt", "Bollobas-Riordan-Tutte polynomial"));
  brt->add_option("--eval", r.eval, "evaluate at exact rationals x y z")->expected(3);
  brt->add_option("--cap", r.brt_cap, "edge cap for subset enumeration");
  auto* tutte = with_input(app.add_subcommand("tutte", "Tutte polynomial evaluation"));
  tutte->add_option("--eval", r.eval, "x y as exact rationals")->expected(2)->required();
  tutte->add_option("--cap", r.brt_cap, "edge cap for subset enumeration");
  auto* homology = with_input(app.add_subcommand("homology", "tree/co-tree, cycles p_j, phi(P) and b"));
  homology->add_option("--tree", r.tree, "comma-separated spanning tree edges")->delimiter(',');
  auto* reps = with_input(app.add_subcommand("reps", "class representatives of a plane graph"));
  auto* signature = with_input(app.add_subcommand("signature", "class signature of a coloring"));
  signature->add_option("--coloring", r.coloring, "0/1 string in edge order")->required();
  auto* same = with_input(app.add_subcommand("same-class", "whether two colorings are equivalent"));
  same->add_option("--a", r.a, "first coloring")->required();
  same->add_option("--b", r.b, "second coloring")->required();
  auto* bot = with_input(app.add_subcommand("bot", "stacked incidence matrix with one vertex and one face removed"));
  bot->add_option("--vertex", r.vertex, "vertex row to drop");
  bot->add_option("--face", r.face, "face row to drop (must touch the vertex)");
  auto* oracle = with_input(app.add_subcommand("oracle", "brute-force orbit census"));
  oracle->add_flag("--reps", r.reps, "print one representative coloring per class");
  oracle->add_option("--cap", r.oracle_cap, "edge cap");
  auto* selftest = app.add_subcommand("selftest", "run every invariant on the built-in fixtures");
  selftest->add_flag("--json", r.json_output, "emit a machine-readable JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return static_cast<int>(ErrorKind::input);
  }

  try {
    if (info->parsed()) return cmd_info(r, out);
    if (dual_cmd->parsed()) return cmd_dual(r, out);
    if (count->parsed()) return cmd_count(r, out);
    if (medial->parsed()) return cmd_medial(r, out);
    if (brt->parsed()) return cmd_brt(r, out);
    if (tutte->parsed()) return cmd_tutte(r, out);
    if (homology->parsed()) return cmd_homology(r, out);
    if (reps->parsed()) return cmd_reps(r, out);
    if (signature->parsed()) return cmd_signature(r, out);
    if (same->parsed()) return cmd_same_class(r, out);
    if (bot->parsed()) return cmd_bot(r, out);
    if (oracle->parsed()) return cmd_oracle(r, out);
    if (selftest->parsed()) return cmd_selftest(r, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::invariant);
  }
  return static_cast<int>(ErrorKind::input);
}

}  // namespace edgegame::cli
