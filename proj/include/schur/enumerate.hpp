#pragma once

// Closure of a partition to an S-ring, exhaustive S-ring enumeration over a
// small group, a brute-force oracle, and the schurity census.
//
// Enumeration works on the lattice of S-rings.  Every S-ring is the join of
// the S-rings <T> generated by its basic sets T, and each such T is
// "closed": a basic set of <T>.  Starting from the rank-2 S-ring, joining
// with <T> for every closed T sitting strictly inside a basic set reaches
// every S-ring.  Both the closed sets and the S-rings are handled up to
// Aut(G), and the orbits are expanded at the end.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/group.hpp"
#include "schur/sring.hpp"

namespace schur {

namespace detail {

// Renumbers classes by first occurrence in element order.
inline std::vector<color_t> rg_form(std::span<const color_t> c) {
  std::vector<color_t> map(c.size() + 1, ~color_t{0}), out(c.size());
  color_t next = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto& m = map[c[i]];
    if (m == ~color_t{0}) m = next++;
    out[i] = m;
  }
  return out;
}

inline std::size_t count_classes(std::span<const color_t> c) {
  color_t m = 0;
  for (color_t x : c) m = std::max(m, x);
  return c.empty() ? 0 : m + 1;
}

struct ClosureEngine {
  const FiniteGroup& G;
  std::size_t n;
  std::vector<elem_t> inv;
  // left_div[z * n + x] = x^-1 z
  std::vector<elem_t> left_div;

  explicit ClosureEngine(const FiniteGroup& g) : G(g), n(g.order()), inv(n), left_div(n * n) {
    for (elem_t x = 0; x < n; ++x) inv[x] = G.inv(x);
    for (elem_t z = 0; z < n; ++z)
      for (elem_t x = 0; x < n; ++x) left_div[z * n + x] = G.mul(inv[x], z);
  }

  // Coarsest S-ring partition refining c (and its inverse image, and {e}).
  // Each round splits classes by the exact signature
  //   (class z, class z^-1, multiset of (class x, class x^-1 z) over x).
  std::vector<color_t> close(std::span<const color_t> seed) const {
    std::vector<color_t> c(seed.begin(), seed.end());
    // initial: separate e and pair with the class of the inverse
    {
      std::map<std::tuple<int, color_t, color_t>, color_t> ids;
      std::vector<color_t> d(n);
      for (elem_t z = 0; z < n; ++z) {
        auto key = std::tuple<int, color_t, color_t>(z == 0 ? 0 : 1, c[z], c[inv[z]]);
        d[z] = ids.try_emplace(key, static_cast<color_t>(ids.size())).first->second;
      }
      c = rg_form(d);
    }
    std::size_t r = count_classes(c);
    std::vector<std::uint64_t> sig;
    std::vector<std::uint64_t> codes(n);
    while (r < n) {
      std::map<std::vector<std::uint64_t>, color_t> ids;
      std::vector<color_t> d(n);
      for (elem_t z = 0; z < n; ++z) {
        for (elem_t x = 0; x < n; ++x)
          codes[x] = static_cast<std::uint64_t>(c[x]) * r + c[left_div[z * n + x]];
        std::sort(codes.begin(), codes.end());
        sig.assign({c[z], c[inv[z]]});
        sig.insert(sig.end(), codes.begin(), codes.end());
        d[z] = ids.try_emplace(sig, static_cast<color_t>(ids.size())).first->second;
      }
      std::size_t r2 = ids.size();
      c = rg_form(d);
      if (r2 == r) break;
      r = r2;
    }
    return c;
  }
};

}  // namespace detail

// The smallest S-ring whose module contains every seed class sum.
inline SRing sring_closure(const FiniteGroup& G, const ElementPartition& seed) {
  const std::size_t n = G.order();
  std::vector<color_t> c(n, ~color_t{0});
  for (std::size_t i = 0; i < seed.size(); ++i)
    for (elem_t x : seed[i]) {
      require(x < n, "sring_closure: element out of range");
      require(c[x] == ~color_t{0}, "sring_closure: seed classes overlap");
      c[x] = static_cast<color_t>(i);
    }
  for (color_t x : c) require(x != ~color_t{0}, "sring_closure: seed does not cover G");
  detail::ClosureEngine E(G);
  return SRing::from_class_vector(G, E.close(c));
}

struct EnumerationBudget {
  std::uint64_t node_cap = 50'000'000;  // closures computed
  double seconds = 3600;
  bool allow_partial = false;  // return complete = false instead of throwing
};

struct EnumerationStats {
  std::uint64_t closures = 0;
  std::size_t closed_sets = 0;       // closed subsets found (all of them)
  std::size_t orbit_representatives = 0;
  std::size_t automorphisms = 0;
  double seconds = 0;
};

struct EnumerationResult {
  std::vector<SRing> srings;       // sorted by (rank, class vector)
  std::vector<std::size_t> orbit;  // Aut(G)-orbit index of each S-ring
  std::vector<std::size_t> representative;  // index into srings, per orbit
  bool complete = true;
  EnumerationStats stats;
};

inline constexpr std::size_t kEnumerationOrderCap = 32;
// 2^bits visited flags; order 28 needs 16 MiB.
inline constexpr std::size_t kSubsetScanBits = 27;

inline EnumerationResult enumerate_srings(const FiniteGroup& G, EnumerationBudget budget = {}) {
  const std::size_t n = G.order();
  require(n <= kEnumerationOrderCap,
          "enumerate_srings: order exceeds " + std::to_string(kEnumerationOrderCap));
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  EnumerationResult res;
  auto auts = automorphisms(G);
  res.stats.automorphisms = auts.size();
  detail::ClosureEngine E(G);

  bool stop = false;
  auto tick = [&]() {
    ++res.stats.closures;
    if (res.stats.closures > budget.node_cap ||
        (res.stats.closures % 256 == 0 &&
         std::chrono::duration<double>(clock::now() - t0).count() > budget.seconds)) {
      if (!budget.allow_partial)
        throw BudgetExceeded("enumerate_srings: budget exhausted after " +
                             std::to_string(res.stats.closures) + " closures");
      stop = true;
    }
  };

  auto finish = [&](std::vector<std::vector<color_t>> keys) {
    // expand orbits, sort, and number them
    std::vector<std::pair<std::vector<color_t>, std::size_t>> all;
    for (std::size_t o = 0; o < keys.size(); ++o) {
      std::set<std::vector<color_t>> orbit;
      for (const auto& f : auts) {
        std::vector<color_t> d(n);
        for (elem_t x = 0; x < n; ++x) d[f[x]] = keys[o][x];
        orbit.insert(detail::rg_form(d));
      }
      for (const auto& v : orbit) all.emplace_back(v, o);
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      std::size_t ra = detail::count_classes(a.first), rb = detail::count_classes(b.first);
      if (ra != rb) return ra < rb;
      return a < b;
    });
    std::vector<std::size_t> orbit_num(keys.size(), ~std::size_t{0});
    std::size_t next = 0;
    for (auto& [v, o] : all) {
      if (orbit_num[o] == ~std::size_t{0}) {
        orbit_num[o] = next++;
        res.representative.push_back(res.srings.size());
      }
      res.srings.push_back(SRing::from_class_vector(G, v));
      res.orbit.push_back(orbit_num[o]);
    }
    res.stats.orbit_representatives = keys.size();
    res.stats.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return res;
  };

  if (n == 1) return finish({{0}});

  // --- closed subsets of G \ {e}, as bitmasks over elements 1..n-1 -------
  using mask_t = std::uint64_t;
  const std::size_t bits = n - 1;
  const mask_t full = bits == 64 ? ~mask_t{0} : (mask_t{1} << bits) - 1;
  auto apply = [&](const std::vector<elem_t>& f, mask_t m) {
    mask_t out = 0;
    for (std::size_t b = 0; b < bits; ++b)
      if (m >> b & 1) out |= mask_t{1} << (f[b + 1] - 1);
    return out;
  };
  std::vector<mask_t> inv_bit(bits);
  for (std::size_t b = 0; b < bits; ++b) inv_bit[b] = mask_t{1} << (G.inv(b + 1) - 1);
  auto inverse_of = [&](mask_t m) {
    mask_t out = 0;
    for (std::size_t b = 0; b < bits; ++b)
      if (m >> b & 1) out |= inv_bit[b];
    return out;
  };
  require(bits <= kSubsetScanBits,
          "enumerate_srings: the closed-subset scan is limited to order " +
              std::to_string(kSubsetScanBits + 1));
  std::vector<bool> visited(std::size_t{1} << bits, false);
  std::vector<mask_t> closed;
  std::vector<color_t> seed(n);
  for (mask_t m = 1; m <= full && !stop; ++m) {
    if (visited[m]) continue;
    std::vector<mask_t> orbit{m};
    visited[m] = true;
    for (const auto& f : auts) {
      mask_t t = apply(f, m);
      if (!visited[t]) {
        visited[t] = true;
        orbit.push_back(t);
      }
    }
    mask_t mi = inverse_of(m);
    if (mi != m && (mi & m)) continue;
    seed[0] = 0;
    for (std::size_t b = 0; b < bits; ++b) seed[b + 1] = (m >> b & 1) ? 1 : 2;
    tick();
    auto c = E.close(seed);
    // closed iff the elements of T form one class of the closure
    color_t t = ~color_t{0};
    bool ok = true;
    std::size_t cnt = 0;
    for (std::size_t b = 0; b < bits && ok; ++b) {
      if (m >> b & 1) {
        if (t == ~color_t{0}) t = c[b + 1];
        ok = c[b + 1] == t;
        ++cnt;
      }
    }
    if (ok) {
      std::size_t size = 0;
      for (color_t x : c) size += x == t;
      ok = size == cnt;
    }
    if (ok) closed.insert(closed.end(), orbit.begin(), orbit.end());
  }
  std::sort(closed.begin(), closed.end());
  res.stats.closed_sets = closed.size();
  visited.clear();
  visited.shrink_to_fit();

  // --- BFS over Aut(G)-classes of S-rings ---------------------------------
  auto canonical = [&](const std::vector<color_t>& c) {
    std::vector<color_t> best;
    std::vector<color_t> d(n);
    for (const auto& f : auts) {
      for (elem_t x = 0; x < n; ++x) d[f[x]] = c[x];
      auto k = detail::rg_form(d);
      if (best.empty() || k < best) best = std::move(k);
    }
    return best;
  };
  std::set<std::vector<color_t>> seen;
  std::vector<std::vector<color_t>> queue;
  {
    std::vector<color_t> r2(n, 1);
    r2[0] = 0;
    auto k = canonical(r2);
    seen.insert(k);
    queue.push_back(k);
  }
  for (std::size_t qi = 0; qi < queue.size() && !stop; ++qi) {
    const std::vector<color_t> A = queue[qi];
    const std::size_t r = detail::count_classes(A);
    std::vector<mask_t> cls(r, 0);
    for (std::size_t b = 0; b < bits; ++b) cls[A[b + 1]] |= mask_t{1} << b;
    for (mask_t T : closed) {
      if (stop) break;
      bool inside = false;
      for (color_t i = 1; i < r && !inside; ++i)
        inside = (T & cls[i]) == T && T != cls[i];
      if (!inside) continue;
      // meet of A with {T, rest}
      for (elem_t x = 0; x < n; ++x)
        seed[x] = static_cast<color_t>(2 * A[x] + (x > 0 && (T >> (x - 1) & 1)));
      tick();
      auto J = E.close(seed);
      auto k = canonical(J);
      if (seen.insert(k).second) queue.push_back(std::move(k));
    }
  }
  if (stop) res.complete = false;
  return finish(std::move(queue));
}

// Every partition of G with {e} a class that is an S-ring; n <= 8.
inline std::vector<SRing> brute_force_srings(const FiniteGroup& G) {
  const std::size_t n = G.order();
  require(n <= 8, "brute_force_srings: order exceeds 8");
  std::vector<SRing> out;
  if (n == 1) return {group_ring(G)};
  // restricted-growth strings over elements 1..n-1
  std::vector<color_t> a(n, 0);
  auto rec = [&](auto&& self, std::size_t i, color_t blocks) -> void {
    if (i == n) {
      std::vector<color_t> c(n);
      c[0] = 0;
      for (std::size_t x = 1; x < n; ++x) c[x] = a[x] + 1;
      auto v = try_sring(G, [&] {
        ElementPartition P(blocks + 1);
        for (elem_t x = 0; x < n; ++x) P[c[x]].push_back(x);
        return P;
      }());
      if (v.ok()) out.push_back(*v.sring);
      return;
    }
    for (color_t b = 0; b <= blocks; ++b) {
      a[i] = b;
      self(self, i + 1, std::max<color_t>(blocks, b + 1));
    }
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end(), [](const SRing& x, const SRing& y) {
    if (x.rank() != y.rank()) return x.rank() < y.rank();
    auto cx = detail::rg_form(x.class_vector()), cy = detail::rg_form(y.class_vector());
    return cx < cy;
  });
  return out;
}

struct CensusRow {
  std::size_t index = 0;  // position in the enumeration
  std::size_t orbit = 0;
  std::size_t rank = 0;
  bool schurian = false;
  BigInt aut_order;
  std::size_t aut_rank = 0;
};

struct Census {
  std::string group_label;
  std::size_t group_order = 0;
  std::vector<CensusRow> rows;
  std::vector<SRing> srings;
  bool complete = true;
  EnumerationStats stats;
  bool is_schur() const {
    return complete && std::all_of(rows.begin(), rows.end(),
                                   [](const CensusRow& r) { return r.schurian; });
  }
  std::size_t non_schurian() const {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [](const CensusRow& r) { return !r.schurian; }));
  }
};

// Schurity of every S-ring over G; verdicts are computed once per
// Aut(G)-orbit since relabeling by an automorphism preserves them.
inline Census schurity_census(const FiniteGroup& G, EnumerationBudget budget = {},
                              std::uint64_t node_cap = kDefaultNodeCap) {
  auto E = enumerate_srings(G, budget);
  Census c;
  c.group_label = G.label();
  c.group_order = G.order();
  c.complete = E.complete;
  c.stats = E.stats;
  std::vector<SchurityResult> verdict;
  for (std::size_t rep : E.representative) verdict.push_back(is_schurian(E.srings[rep], node_cap));
  for (std::size_t i = 0; i < E.srings.size(); ++i) {
    const auto& v = verdict[E.orbit[i]];
    c.rows.push_back({i, E.orbit[i], E.srings[i].rank(), v.schurian, v.aut_order, v.aut_rank});
  }
  c.srings = std::move(E.srings);
  return c;
}

}  // namespace schur
