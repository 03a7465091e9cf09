#pragma once

// Cross-checks between every counting route and structural invariant, on one graph.
// Each check has a stable id so callers (selftest, acceptance suite) can report per check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edgegame/brt.hpp"
#include "edgegame/embedded_graph.hpp"
#include "edgegame/gf2.hpp"
#include "edgegame/homology.hpp"
#include "edgegame/medial.hpp"
#include "edgegame/oracle.hpp"
#include "edgegame/representatives.hpp"
#include "edgegame/spaces.hpp"

namespace edgegame {

struct Check {
  std::string id;
  bool ok = false;
  std::string detail;
};

struct InvariantOptions {
  std::size_t brt_edge_cap = 16;
  std::size_t oracle_edge_cap = 14;
  unsigned shuffle_rounds = 3;  // randomized tree tie-breaks for the b-invariance check
  std::uint64_t seed = 1;
};

namespace detail {

inline bool columns_even(const gf2::BitMatrix& m) {
  const auto t = m.transpose();
  for (const auto& col : t.rows())
    if (col.count() != 0 && col.count() != 2) return false;
  return true;
}

inline std::vector<gf2::BitVector> sorted_rows(const gf2::BitMatrix& m) {
  std::vector<gf2::BitVector> rows = m.rows();
  std::sort(rows.begin(), rows.end());
  return rows;
}

inline gf2::BitVector row_sum(const gf2::BitMatrix& m) {
  gf2::BitVector s(m.col_count());
  for (const auto& r : m.rows()) s ^= r;
  return s;
}

}  // namespace detail

inline std::vector<Check> check_invariants(const EmbeddedGraph& g, const InvariantOptions& options = {}) {
  std::vector<Check> out;
  const auto run = [&](const std::string& id, const std::function<bool(std::string&)>& body) {
    Check c{id, false, {}};
    try {
      c.ok = body(c.detail);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail = std::string("exception: ") + ex.what();
    }
    out.push_back(std::move(c));
  };

  const std::size_t v = g.vertex_count();
  const std::size_t e = g.edge_count();
  const std::size_t f = g.face_count();
  const auto inc = incidence_matrix(g);
  const auto dinc = dual_incidence_matrix(g);
  const auto cycles = cycle_space(g);
  const auto dual_cycles = dual_cycle_space(g);
  const auto u_cap_ustar = gf2::row_space_intersection_basis(inc, dinc);

  run("euler", [&](std::string& d) {
    d = "v - e + f = " + std::to_string(static_cast<long long>(v) - static_cast<long long>(e) + static_cast<long long>(f)) +
        ", genus " + std::to_string(g.genus());
    return static_cast<long long>(v) - static_cast<long long>(e) + static_cast<long long>(f) ==
           2 - 2 * static_cast<long long>(g.genus());
  });

  run("incidence_parity", [&](std::string&) {
    return detail::columns_even(inc) && detail::row_sum(inc).none() && detail::columns_even(dinc) &&
           detail::row_sum(dinc).none();
  });

  run("dual_involution", [&](std::string& d) {
    const EmbeddedGraph dg = dual(g);
    const EmbeddedGraph ddg = dual(dg);
    d = "dual has " + std::to_string(dg.vertex_count()) + " vertices, " + std::to_string(dg.face_count()) + " faces";
    return dg.vertex_count() == f && dg.face_count() == v && dg.edge_count() == e && ddg.vertex_count() == v &&
           ddg.face_count() == f && incidence_matrix(dg) == dinc &&
           detail::sorted_rows(incidence_matrix(ddg)) == detail::sorted_rows(inc);
  });

  run("sub_ribbon_extremes", [&](std::string&) {
    if (e > 63) return true;
    SubRibbonCounter counter(g);
    const std::uint64_t all = e == 0 ? 0 : (e == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1);
    return counter.face_count(all) == f && counter.face_count(0) == v;
  });

  run("cocycles_orthogonal", [&](std::string&) {
    for (const auto& r : inc.rows())
      for (const auto& s : dinc.rows())
        if (r.dot(s)) return false;
    return true;
  });

  run("homology_dimension", [&](std::string& d) {
    const std::size_t quotient = cycles.row_count() - gf2::rank(dinc);
    d = "dim(U^perp / U*) = " + std::to_string(quotient);
    return gf2::rank(inc) + 1 == v && quotient == 2 * g.genus();
  });

  if (g.genus() == 0) {
    run("plane_dual_cocycles_are_cycles", [&](std::string&) { return gf2::same_row_space(dinc, cycles); });
  }

  const MedialComponents mc = trace_medial(g);
  if (!mc.edgeless) {
    run("medial_generators", [&](std::string& d) {
      const auto all = mc.trace_matrix(e);
      d = "c = " + std::to_string(mc.count);
      return detail::row_sum(all).none() && gf2::rank(all) + 1 == mc.count;
    });
    run("medial_in_both_cycle_spaces", [&](std::string&) {
      const auto moves = gf2::stack(inc, dinc);
      for (const auto& t : mc.traces)
        for (const auto& r : moves.rows())
          if (t.dot(r)) return false;
      return true;
    });
  }

  const SpaceP p = space_P(mc, e);
  if (e <= options.brt_edge_cap) {
    const auto brt = brt_polynomial(g, {options.brt_edge_cap, 1});
    run("brt_counts_medial_components", [&](std::string& d) {
      const Rational value = brt.evaluate(Rational(-2), Rational(-2), Rational(1, 4));
      d = "BRT(-2,-2,1/4) = " + to_string(value) + ", c = " + std::to_string(mc.count);
      if (mc.edgeless) return value == 1;
      return medial_component_count_via_brt(brt) == mc.count;
    });
    run("brt_z_one_is_tutte", [&](std::string&) {
      return brt.at_z_one() == tutte_rank_polynomial(g, options.brt_edge_cap);
    });
    run("brt_subset_total", [&](std::string&) {
      for (const auto& [m, c] : brt.terms())
        if (m.z > g.genus()) return false;
      return brt.coefficient_sum() == pow2(e);
    });
    if (g.genus() == 0) {
      run("plane_bicycle_is_tutte", [&](std::string& d) {
        using boost::multiprecision::abs;
        const Rational t = tutte_by_rank_oracle(g, Rational(-1), Rational(-1), options.brt_edge_cap);
        d = "T(-1,-1) = " + to_string(t);
        return abs(t) == Rational(pow2(bicycle_space(g).row_count()));
      });
    }
  }

  run("lins_richter_shank_inclusions", [&](std::string&) {
    return gf2::row_space_contains(p.basis, u_cap_ustar) &&
           gf2::row_space_contains(gf2::row_space_intersection_basis(cycles, dual_cycles), p.basis);
  });

  run("phi_kernel_is_u_cap_ustar", [&](std::string&) {
    const HomologyMap hm = homology_map(g);
    return gf2::same_row_space(phi_kernel_on_P(hm, p), u_cap_ustar);
  });

  run("phi_kernel_on_cycles_is_ustar", [&](std::string&) {
    const HomologyMap hm = homology_map(g);
    for (const auto& r : dinc.rows())
      if (phi(hm, r).any()) return false;
    gf2::BitMatrix images(hm.rank());
    for (const auto& c : cycles.rows()) images.push_row(phi(hm, c));
    return gf2::rank(images) == 2 * g.genus();
  });

  run("phi_star_same_kernel_on_P", [&](std::string&) {
    const HomologyMap star = dual_homology_map(g);
    return gf2::same_row_space(phi_kernel_on_P(star, p), phi_kernel_on_P(homology_map(g), p));
  });

  run("b_independent_of_tree", [&](std::string& d) {
    const std::size_t b0 = kernel_dim_on_P(g);
    for (unsigned r = 0; r < options.shuffle_rounds; ++r) {
      TreeOptions opt;
      opt.shuffle_seed = options.seed * 1000003u + r;
      const std::size_t b = kernel_dim_on_P(g, opt);
      if (b != b0) {
        d = "b = " + std::to_string(b0) + " vs " + std::to_string(b) + " with shuffled tie-breaking";
        return false;
      }
    }
    d = "b = " + std::to_string(b0);
    return true;
  });

  run("class_count_routes_agree", [&](std::string& d) {
    const BigInt direct = class_count_direct(g);
    const BigInt homology = class_count_homology(g);
    const BigInt identity = pow2(2 * g.genus() + u_cap_ustar.row_count());
    d = "direct " + direct.str() + ", homology " + homology.str();
    bool ok = direct == homology && direct == identity;
    if (e <= options.oracle_edge_cap) {
      const BigInt brute = enumerate_classes(g, options.oracle_edge_cap).class_count;
      d += ", oracle " + brute.str();
      ok = ok && brute == direct;
    }
    return ok;
  });

  run("bot_matrix_rank", [&](std::string&) {
    const std::size_t sum = gf2::row_space_sum_dim(inc, dinc);
    if (e == 0) return gf2::rank(bot_matrix(g)) == sum;
    for (std::size_t v0 = 0; v0 < v; ++v0)
      for (std::size_t f0 = 0; f0 < f; ++f0)
        if (face_touches_vertex(g, f0, v0) && gf2::rank(bot_matrix(g, v0, f0)) != sum) return false;
    return true;
  });

  if (g.genus() == 0) {
    run("plane_representatives", [&](std::string& d) {
      const RepresentativeSet rs = planar_representatives(g);
      d = "|S| = " + std::to_string(rs.edges.size());
      return verify_representatives(g, rs);
    });
  }
  return out;
}

inline bool all_ok(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

}  // namespace edgegame
