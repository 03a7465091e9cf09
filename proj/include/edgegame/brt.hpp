#pragma once

// Bollobás-Riordan-Tutte polynomial by enumeration of spanning sub-ribbons:
//
//   BRT(x, y, z) = sum over H ⊆ E of x^(k(H) - k(G)) y^(n(H)) z^(g(H))
//
// with the x variable shifted by one relative to Bollobás-Riordan, so that
// BRT(x - 1, y - 1, 1) is the Tutte polynomial T(x, y).

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "edgegame/embedded_graph.hpp"
#include "edgegame/errors.hpp"
#include "edgegame/numeric.hpp"

namespace edgegame {

struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class TrivariatePolynomial {
 public:
  void add(const Monomial& m, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Terms in lexicographic (x, y, z) exponent order; no zero coefficients.
  const std::map<Monomial, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) total += Rational(c) * power(x, m.x) * power(y, m.y) * power(z, m.z);
    return total;
  }

  /// Collapses z to 1, leaving a polynomial in x and y.
  TrivariatePolynomial at_z_one() const {
    TrivariatePolynomial p;
    for (const auto& [m, c] : terms_) p.add({m.x, m.y, 0}, c);
    return p;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      const BigInt magnitude = negative ? BigInt(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string vars;
      for (auto [name, e] : {std::pair{'x', m.x}, std::pair{'y', m.y}, std::pair{'z', m.z}}) {
        if (e == 0) continue;
        if (!vars.empty()) vars += '*';
        vars += name;
        if (e > 1) vars += "^" + std::to_string(e);
      }
      if (vars.empty()) {
        out += magnitude.str();
      } else if (magnitude == 1) {
        out += vars;
      } else {
        out += magnitude.str() + "*" + vars;
      }
    }
    return out;
  }

  friend bool operator==(const TrivariatePolynomial&, const TrivariatePolynomial&) = default;

 private:
  static Rational power(const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
  }

  std::map<Monomial, BigInt> terms_;
};

struct BrtOptions {
  std::size_t edge_cap = 26;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

inline void require_edge_cap(const EmbeddedGraph& g, std::size_t cap) {
  if (g.edge_count() > cap)
    throw CapExceededError("graph has " + std::to_string(g.edge_count()) + " edges; subset enumeration is capped at " +
                           std::to_string(cap));
  if (g.edge_count() > 40) throw CapExceededError("subset enumeration supports at most 40 edges");
}

// Splits [0, 2^m) into contiguous chunks and runs `work(begin, end, slot)` on each.
template <typename Work>
void for_subset_ranges(std::size_t edges, unsigned threads, Work&& work) {
  const std::uint64_t total = std::uint64_t{1} << edges;
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  if (total < (std::uint64_t{1} << 12)) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
  const std::uint64_t chunk = (total + workers - 1) / workers;
  if (workers == 1) {
    work(std::uint64_t{0}, total, 0u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([&work, begin, end, w] { work(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

inline TrivariatePolynomial brt_polynomial(const EmbeddedGraph& g, const BrtOptions& options = {}) {
  detail::require_edge_cap(g, options.edge_cap);
  const std::size_t v = g.vertex_count();
  const std::size_t e = g.edge_count();
  const std::size_t genus = g.genus();
  // Dense table over (k(H) - 1, n(H), g(H)); connected G so k(G) = 1.
  const std::size_t ny = e + 1;
  const std::size_t nz = genus + 1;
  const auto slot_of = [&](std::size_t a, std::size_t b, std::size_t c) { return (a * ny + b) * nz + c; };
  const unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(v * ny * nz, 0));
  std::vector<std::string> failures(workers);

  detail::for_subset_ranges(e, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    SubRibbonCounter counter(g);
    auto& table = partial[w];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const std::size_t edges = static_cast<std::size_t>(std::popcount(mask));
      const std::size_t k = counter.component_count(mask);
      const std::size_t f = counter.face_count(mask);
      const std::size_t nullity = edges + k - v;
      const long long twice_g = 2 * static_cast<long long>(k) - static_cast<long long>(v) +
                                static_cast<long long>(edges) - static_cast<long long>(f);
      if (twice_g < 0 || twice_g % 2 != 0 || static_cast<std::size_t>(twice_g / 2) > genus) {
        failures[w] = "sub-ribbon genus out of range for edge mask " + std::to_string(mask);
        return;
      }
      ++table[slot_of(k - 1, nullity, static_cast<std::size_t>(twice_g / 2))];
    }
  });
  for (const auto& f : failures)
    if (!f.empty()) throw InvariantError(f);

  TrivariatePolynomial p;
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      for (std::size_t c = 0; c < nz; ++c) {
        std::int64_t sum = 0;
        for (const auto& t : partial) sum += t[slot_of(a, b, c)];
        if (sum)
          p.add({static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(c)}, BigInt(sum));
      }
  return p;
}

inline Rational brt_eval(const TrivariatePolynomial& p, const Rational& x, const Rational& y, const Rational& z) {
  return p.evaluate(x, y, z);
}

inline Rational tutte_eval(const EmbeddedGraph& g, const Rational& x, const Rational& y,
                           const BrtOptions& options = {}) {
  return brt_polynomial(g, options).evaluate(x - 1, y - 1, Rational(1));
}

/// Tutte polynomial from the rank function alone, as coefficients of (x-1)^a (y-1)^b:
/// sum over H of (x-1)^(r(E) - r(H)) (y-1)^(|H| - r(H)) with r(H) = |V| - k(H).
/// No face tracing is involved.
inline TrivariatePolynomial tutte_rank_polynomial(const EmbeddedGraph& g, std::size_t edge_cap = 26) {
  detail::require_edge_cap(g, edge_cap);
  const std::size_t v = g.vertex_count();
  const std::size_t e = g.edge_count();
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> counts;
  std::vector<std::pair<std::size_t, std::size_t>> ends(e);
  for (std::size_t j = 0; j < e; ++j) ends[j] = g.endpoints(j);
  const std::size_t full_rank = v - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    detail::UnionFind uf(v);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < e; ++j)
      if ((mask >> j) & 1u) rank += uf.unite(ends[j].first, ends[j].second) ? 1 : 0;
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    ++counts[{full_rank - rank, size - rank}];
  }
  TrivariatePolynomial p;
  for (const auto& [ab, c] : counts)
    p.add({static_cast<unsigned>(ab.first), static_cast<unsigned>(ab.second), 0}, BigInt(c));
  return p;
}

inline Rational tutte_by_rank_oracle(const EmbeddedGraph& g, const Rational& x, const Rational& y,
                                     std::size_t edge_cap = 26) {
  return tutte_rank_polynomial(g, edge_cap).evaluate(x - 1, y - 1, Rational(1));
}

/// Number of medial components read off BRT(-2, -2, 1/4) = ±2^(c-1).
inline std::size_t medial_component_count_via_brt(const TrivariatePolynomial& p) {
  using boost::multiprecision::abs;
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Rational value = p.evaluate(Rational(-2), Rational(-2), Rational(1, 4));
  check_invariant(denominator(value) == 1, "BRT(-2,-2,1/4) = " + to_string(value) + " is not an integer");
  BigInt n = abs(numerator(value));
  check_invariant(n > 0 && (n & (n - 1)) == 0, "|BRT(-2,-2,1/4)| = " + n.str() + " is not a power of two");
  std::size_t log2 = 0;
  while (n > 1) {
    n >>= 1;
    ++log2;
  }
  return log2 + 1;
}

inline std::size_t medial_component_count_via_brt(const EmbeddedGraph& g, const BrtOptions& options = {}) {
  return medial_component_count_via_brt(brt_polynomial(g, options));
}

}  // namespace edgegame
