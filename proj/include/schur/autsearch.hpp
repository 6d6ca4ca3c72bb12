#pragma once

// Automorphisms and isomorphisms of colored matrices by individualization
// and refinement.
//
// A ColoredStructure is a vertex coloring plus an n x n matrix of colors.
// Refinement makes the ordered partition equitable with respect to the
// matrix: vertices in one cell must see the same multiset of (M(v,w),
// M(w,v)) over every cell.  Multisets are compared through a commutative
// 64-bit hash; collisions can only weaken pruning because every leaf is
// verified exactly.
//
// The first path through the search tree fixes the base.  Levels are then
// processed bottom-up: at each level every vertex of the target cell is
// either shown to be in the orbit of the base point (an automorphism is
// found below it) or proven not to be (its subtree holds no automorphism).
// The automorphisms found form a strong generating set for that base.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "schur/error.hpp"
#include "schur/group.hpp"
#include "schur/perm.hpp"
#include "schur/scheme.hpp"

namespace schur {

struct ColoredStructure {
  std::size_t n = 0;
  std::vector<std::uint32_t> vcol;  // size n
  std::vector<std::uint32_t> M;     // size n * n

  static ColoredStructure from_scheme(const AssociationScheme& X) {
    ColoredStructure S;
    S.n = X.size();
    S.vcol.assign(S.n, 0);
    S.M.assign(X.colors().begin(), X.colors().end());
    return S;
  }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t refinements = 0;
  std::uint64_t generators = 0;
  double seconds = 0;
};

inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Partition {
  std::vector<point_t> elems;
  std::vector<std::uint32_t> cell;  // vertex -> start of its cell
  std::vector<std::uint32_t> end;   // start -> one past the cell's end
  std::size_t ncells = 0;

  bool discrete() const noexcept { return ncells == elems.size(); }
  std::uint32_t size_at(std::uint32_t s) const noexcept { return end[s] - s; }

  // First smallest non-singleton cell; requires a non-discrete partition.
  std::uint32_t target() const {
    std::uint32_t best = 0, best_size = ~0u;
    for (std::uint32_t s = 0; s < elems.size(); s = end[s]) {
      std::uint32_t sz = end[s] - s;
      if (sz > 1 && sz < best_size) {
        best = s;
        best_size = sz;
      }
    }
    return best;
  }
};

inline bool is_isomorphism(const ColoredStructure& A, const ColoredStructure& B,
                           std::span<const point_t> g) {
  const std::size_t n = A.n;
  for (std::size_t x = 0; x < n; ++x)
    if (B.vcol[g[x]] != A.vcol[x]) return false;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t gx = g[x] * n;
    for (std::size_t y = 0; y < n; ++y)
      if (B.M[gx + g[y]] != A.M[x * n + y]) return false;
  }
  return true;
}

// Union-find over points for orbit bookkeeping.
struct Orbits {
  std::vector<point_t> parent;
  explicit Orbits(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  point_t find(point_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(point_t a, point_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  void add(const Perm& g) {
    for (point_t x = 0; x < parent.size(); ++x) unite(x, g[x]);
  }
};

class Engine {
 public:
  Engine(const ColoredStructure& S, std::uint64_t cap, SearchStats& stats)
      : S_(S), n_(S.n), cap_(cap), stats_(stats), h_(S.n, 0) {}

  Partition initial(std::uint64_t& trace) {
    Partition P;
    P.elems.resize(n_);
    std::iota(P.elems.begin(), P.elems.end(), 0u);
    std::stable_sort(P.elems.begin(), P.elems.end(),
                     [&](point_t a, point_t b) { return S_.vcol[a] < S_.vcol[b]; });
    P.cell.assign(n_, 0);
    P.end.assign(n_ + 1, 0);
    std::vector<std::uint32_t> starts;
    trace = mix64(n_);
    for (std::uint32_t i = 0; i < n_;) {
      std::uint32_t j = i;
      while (j < n_ && S_.vcol[P.elems[j]] == S_.vcol[P.elems[i]]) ++j;
      for (std::uint32_t t = i; t < j; ++t) P.cell[P.elems[t]] = i;
      P.end[i] = j;
      starts.push_back(i);
      trace = mix64(trace ^ (std::uint64_t{S_.vcol[P.elems[i]]} << 32 | (j - i)));
      ++P.ncells;
      i = j;
    }
    trace = mix64(trace ^ refine(P, starts));
    return P;
  }

  // Splits {v} off the front of v's cell and refines; returns the trace.
  std::uint64_t individualize(Partition& P, point_t v) {
    const std::uint32_t s = P.cell[v];
    const std::uint32_t e = P.end[s];
    auto it = std::find(P.elems.begin() + s, P.elems.begin() + e, v);
    std::rotate(P.elems.begin() + s, it, it + 1);
    P.end[s] = s + 1;
    P.end[s + 1] = e;
    for (std::uint32_t t = s + 1; t < e; ++t) P.cell[P.elems[t]] = s + 1;
    ++P.ncells;
    std::uint32_t sp[1] = {s};
    return mix64(refine(P, sp) ^ (std::uint64_t{s} << 20 | (e - s)));
  }

  std::uint64_t refine(Partition& P, std::span<const std::uint32_t> splitters) {
    ++stats_.refinements;
    if (++stats_.nodes > cap_) {
      throw BudgetExceeded("automorphism search: node cap of " + std::to_string(cap_) +
                           " exceeded");
    }
    std::deque<std::uint32_t> q(splitters.begin(), splitters.end());
    std::vector<char> inq(n_ + 1, 0);
    for (auto s : splitters) inq[s] = 1;
    std::uint64_t trace = 0x1234567ULL;
    std::vector<std::pair<std::uint64_t, point_t>> buf;
    while (!q.empty() && !P.discrete()) {
      const std::uint32_t ws = q.front();
      q.pop_front();
      inq[ws] = 0;
      const std::uint32_t we = P.end[ws];
      // Hash of the multiset {(M(v,w), M(w,v)) : w in W} per vertex v.
      for (std::uint32_t s = 0; s < n_; s = P.end[s]) {
        if (P.end[s] - s == 1) continue;
        for (std::uint32_t t = s; t < P.end[s]; ++t) {
          const point_t v = P.elems[t];
          std::uint64_t acc = 0;
          const std::uint32_t* row = &S_.M[v * n_];
          for (std::uint32_t u = ws; u < we; ++u) {
            const point_t w = P.elems[u];
            acc += mix64(std::uint64_t{row[w]} << 32 | S_.M[w * n_ + v]);
          }
          h_[v] = acc;
        }
      }
      for (std::uint32_t s = 0; s < n_;) {
        const std::uint32_t e = P.end[s];
        if (e - s == 1) {
          s = e;
          continue;
        }
        buf.clear();
        for (std::uint32_t t = s; t < e; ++t) buf.push_back({h_[P.elems[t]], P.elems[t]});
        std::stable_sort(buf.begin(), buf.end(),
                         [](auto& a, auto& b) { return a.first < b.first; });
        if (buf.front().first == buf.back().first) {
          s = e;
          continue;
        }
        for (std::uint32_t t = s; t < e; ++t) P.elems[t] = buf[t - s].second;
        std::uint32_t fs = s;
        const bool was_queued = inq[s];
        while (fs < e) {
          std::uint32_t fe = fs;
          while (fe < e && buf[fe - s].first == buf[fs - s].first) ++fe;
          for (std::uint32_t t = fs; t < fe; ++t) P.cell[P.elems[t]] = fs;
          P.end[fs] = fe;
          if (fs != s) ++P.ncells;
          trace = mix64(trace ^ mix64(buf[fs - s].first) ^ (std::uint64_t{fs} << 32 | (fe - fs)));
          if (!inq[fs]) {
            inq[fs] = 1;
            q.push_back(fs);
          }
          fs = fe;
        }
        (void)was_queued;
        s = e;
      }
    }
    return mix64(trace ^ P.ncells);
  }

 private:
  const ColoredStructure& S_;
  std::size_t n_;
  std::uint64_t cap_;
  SearchStats& stats_;
  std::vector<std::uint64_t> h_;
};

struct PathNode {
  Partition P;
  std::uint64_t trace = 0;   // trace of the refinement that produced P
  std::uint32_t target = 0;  // target cell start (unused at the leaf)
  point_t chosen = 0;
};

inline std::vector<PathNode> first_path(Engine& E) {
  std::vector<PathNode> path(1);
  path[0].P = E.initial(path[0].trace);
  while (!path.back().P.discrete()) {
    PathNode& cur = path.back();
    cur.target = cur.P.target();
    cur.chosen = cur.P.elems[cur.target];
    PathNode next;
    next.P = cur.P;
    next.trace = E.individualize(next.P, cur.chosen);
    path.push_back(std::move(next));
  }
  return path;
}

// Depth-first search in T's tree below P for a leaf whose labeling, matched
// with the first leaf of S, is an isomorphism S -> T.  Children are pruned by
// orbits of the known automorphisms of T that fix the current prefix.
class LeafSearch {
 public:
  LeafSearch(const ColoredStructure& S, const ColoredStructure& T, Engine& ET,
             const std::vector<PathNode>& path, const std::vector<Perm>& prune_gens)
      : S_(S), T_(T), ET_(ET), path_(path), gens_(prune_gens) {}

  std::optional<std::vector<point_t>> run(const Partition& P, std::size_t depth,
                                          std::vector<point_t>& prefix) {
    if (P.discrete()) {
      const auto& first = path_.back().P.elems;
      std::vector<point_t> g(S_.n);
      for (std::size_t i = 0; i < S_.n; ++i) g[first[i]] = P.elems[i];
      if (is_isomorphism(S_, T_, g)) return g;
      return std::nullopt;
    }
    if (depth + 1 >= path_.size()) return std::nullopt;
    const std::uint32_t tgt = P.target();
    if (tgt != path_[depth].target || P.size_at(tgt) != path_[depth].P.size_at(tgt)) {
      return std::nullopt;
    }
    Orbits orb(S_.n);
    for (const Perm& g : gens_) {
      bool fixes = true;
      for (point_t x : prefix)
        if (g[x] != x) {
          fixes = false;
          break;
        }
      if (fixes) orb.add(g);
    }
    std::vector<point_t> cell(P.elems.begin() + tgt, P.elems.begin() + P.end[tgt]);
    std::vector<char> tried(S_.n, 0);
    for (point_t u : cell) {
      point_t r = orb.find(u);
      if (tried[r]) continue;
      tried[r] = 1;
      Partition C = P;
      std::uint64_t tr = ET_.individualize(C, u);
      if (tr != path_[depth + 1].trace) continue;
      prefix.push_back(u);
      auto found = run(C, depth + 1, prefix);
      prefix.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

 private:
  const ColoredStructure& S_;
  const ColoredStructure& T_;
  Engine& ET_;
  const std::vector<PathNode>& path_;
  const std::vector<Perm>& gens_;
};

}  // namespace detail

// Automorphism group of a colored structure.
inline PermGroup automorphism_group(const ColoredStructure& S, SearchStats* stats_out = nullptr,
                                    std::uint64_t node_cap = kDefaultNodeCap) {
  require(S.vcol.size() == S.n && S.M.size() == S.n * S.n, "automorphisms: malformed structure");
  require(S.n <= kDegreeCap, "automorphisms: degree cap exceeded");
  auto t0 = std::chrono::steady_clock::now();
  SearchStats stats;
  detail::Engine E(S, node_cap, stats);
  auto path = detail::first_path(E);
  const std::size_t k = path.size() - 1;
  std::vector<point_t> base;
  for (std::size_t d = 0; d < k; ++d) base.push_back(path[d].chosen);
  std::vector<Perm> gens;
  for (std::size_t d = k; d-- > 0;) {
    const detail::PathNode& node = path[d];
    const point_t v = node.chosen;
    std::vector<point_t> cell(node.P.elems.begin() + node.target,
                              node.P.elems.begin() + node.P.end[node.target]);
    std::vector<point_t> failed;
    auto rebuild = [&] {
      detail::Orbits o(S.n);
      for (const Perm& g : gens) o.add(g);
      return o;
    };
    detail::Orbits orb = rebuild();
    for (point_t w : cell) {
      if (w == v || orb.find(w) == orb.find(v)) continue;
      bool known_bad = false;
      for (point_t f : failed)
        if (orb.find(f) == orb.find(w)) {
          known_bad = true;
          break;
        }
      if (known_bad) continue;
      detail::Partition C = node.P;
      std::uint64_t tr = E.individualize(C, w);
      std::optional<std::vector<point_t>> found;
      if (tr == path[d + 1].trace) {
        std::vector<point_t> prefix(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(d));
        prefix.push_back(w);
        detail::LeafSearch ls(S, S, E, path, gens);
        found = ls.run(C, d + 1, prefix);
      }
      if (found) {
        gens.emplace_back(std::move(*found));
        orb = rebuild();
      } else {
        failed.push_back(w);
      }
    }
  }
  stats.generators = gens.size();
  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (stats_out) *stats_out = stats;
  return PermGroup::from_bsgs(S.n, std::move(base), std::move(gens));
}

// An isomorphism g : S -> T (T.M[g x, g y] = S.M[x, y], T.vcol[g x] =
// S.vcol[x]), or nullopt after an exhaustive search.  Known automorphisms of
// T, if supplied, prune the search.
inline std::optional<Perm> find_isomorphism(const ColoredStructure& S, const ColoredStructure& T,
                                            const std::vector<Perm>& t_aut = {},
                                            SearchStats* stats_out = nullptr,
                                            std::uint64_t node_cap = kDefaultNodeCap) {
  if (S.n != T.n) return std::nullopt;
  SearchStats stats;
  detail::Engine ES(S, node_cap, stats), ET(T, node_cap, stats);
  auto path = detail::first_path(ES);
  std::uint64_t trace = 0;
  detail::Partition root = ET.initial(trace);
  std::optional<Perm> out;
  if (trace == path[0].trace) {
    std::vector<point_t> prefix;
    detail::LeafSearch ls(S, T, ET, path, t_aut);
    if (auto g = ls.run(root, 0, prefix)) out = Perm(std::move(*g));
  }
  if (stats_out) *stats_out = stats;
  return out;
}

inline PermGroup aut_scheme(const AssociationScheme& X, SearchStats* stats = nullptr,
                            std::uint64_t node_cap = kDefaultNodeCap) {
  return automorphism_group(ColoredStructure::from_scheme(X), stats, node_cap);
}

// Color permutations pi with pi(0) = 0 that preserve valencies and all
// intersection numbers: p^{pi k}_{pi i, pi j} = p^k_{ij}.
inline std::vector<std::vector<color_t>> algebraic_automorphisms(const AssociationScheme& X,
                                                                 std::size_t cap = 1'000'000) {
  const std::size_t r = X.rank();
  std::vector<std::vector<color_t>> out;
  std::vector<color_t> pi(r, 0);
  std::vector<bool> used(r, false);
  used[0] = true;
  auto consistent = [&](std::size_t upto) {
    // checks every triple that involves color upto and colors < upto
    for (color_t i = 0; i <= upto; ++i)
      for (color_t j = 0; j <= upto; ++j)
        for (color_t k = 0; k <= upto; ++k) {
          if (i != upto && j != upto && k != upto) continue;
          if (X.p(pi[i], pi[j], pi[k]) != X.p(i, j, k)) return false;
        }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == r) {
      out.push_back(pi);
      if (out.size() > cap) throw BudgetExceeded("algebraic automorphisms: count exceeds cap");
      return;
    }
    for (color_t d = 1; d < r; ++d) {
      if (used[d] || X.valency(d) != X.valency(c)) continue;
      pi[c] = d;
      if (!consistent(c)) continue;
      used[d] = true;
      self(self, c + 1);
      used[d] = false;
    }
  };
  if (r == 1) return {{0}};
  rec(rec, 1);
  return out;
}

struct CautResult {
  PermGroup group;
  PermGroup aut;                                   // the color-fixing part
  std::vector<Perm> color_movers;                  // one per realized pi != id
  std::vector<std::vector<color_t>> color_action;  // the pi of each mover
};

// Permutations g with color(x^g, y^g) = pi(color(x, y)) for some pi.
inline CautResult caut_scheme(const AssociationScheme& X, std::uint64_t node_cap = kDefaultNodeCap) {
  CautResult res;
  res.aut = aut_scheme(X, nullptr, node_cap);
  auto S = ColoredStructure::from_scheme(X);
  std::vector<Perm> gens = res.aut.generators();
  const auto aut_gens = res.aut.generators();
  for (const auto& pi : algebraic_automorphisms(X)) {
    bool identity = true;
    for (color_t i = 0; i < pi.size(); ++i) identity = identity && pi[i] == i;
    if (identity) continue;
    // T(u, v) = pi^-1(color(u, v)); an isomorphism S -> T realizes pi.
    std::vector<color_t> inv(pi.size());
    for (color_t i = 0; i < pi.size(); ++i) inv[pi[i]] = i;
    ColoredStructure T = S;
    for (auto& c : T.M) c = inv[c];
    // Aut(T) = Aut(X) since T is X with colors renamed.
    if (auto g = find_isomorphism(S, T, aut_gens, nullptr, node_cap)) {
      res.color_movers.push_back(*g);
      res.color_action.push_back(pi);
      gens.push_back(*g);
    }
  }
  res.group = PermGroup(X.size(), std::move(gens));
  return res;
}

// g^-1 h g for every generator h of D lies in D.
inline bool normalizes(const Perm& g, const PermGroup& D) {
  Perm gi = g.inverse();
  for (const Perm& h : D.generators())
    if (!D.contains(gi * h * g)) return false;
  return true;
}

// N_{Sym(Omega)}(D) for a transitive D, as the stabilizer of D in
// caut(inv(D)) under conjugation.
inline PermGroup normalizer_in_sym(const PermGroup& D, std::uint64_t node_cap = kDefaultNodeCap) {
  require(D.is_transitive(), "normalizer_in_sym: group is not transitive");
  require(D.degree() <= 100, "normalizer_in_sym: degree above 100");
  const std::size_t n = D.degree();
  if (D.order() == boost::multiprecision::cpp_int(1)) return PermGroup::symmetric(n);
  auto C = caut_scheme(orbital_scheme(D), node_cap).group;
  if (C.order() == D.order()) return C;
  bool all = true;
  for (const Perm& g : C.generators()) all = all && normalizes(g, D);
  if (all) return C;
  // D^a = D^b  iff  a b^-1 normalizes D.
  std::vector<Perm> reps{Perm(n)};
  std::vector<Perm> ngens = D.generators();
  PermGroup N(n, ngens);
  auto add_gen = [&](const Perm& g) {
    if (g.is_identity() || N.contains(g)) return;
    ngens.push_back(g);
    N = PermGroup(n, ngens);
  };
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const Perm& s : C.generators()) {
      Perm a = reps[i] * s;
      bool matched = false;
      for (const Perm& b : reps) {
        Perm c = a * b.inverse();
        if (normalizes(c, D)) {
          add_gen(c);
          matched = true;
          break;
        }
      }
      if (!matched) reps.push_back(a);
    }
  }
  return N;
}

// Orbits of G acting componentwise on a set of ordered pairs.
inline std::size_t orbit_count_on_pairs(const PermGroup& G,
                                        const std::vector<std::pair<point_t, point_t>>& pairs) {
  std::map<std::pair<point_t, point_t>, std::size_t> index;
  for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = i;
  detail::Orbits orb(pairs.size());
  for (const Perm& g : G.generators()) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto it = index.find({g[pairs[i].first], g[pairs[i].second]});
      require(it != index.end(), "orbit_count_on_pairs: pair set is not invariant");
      orb.unite(static_cast<point_t>(i), static_cast<point_t>(it->second));
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (orb.find(static_cast<point_t>(i)) == i) ++count;
  return count;
}

inline std::size_t flag_orbit_count(const PermGroup& G,
                                    const std::vector<std::pair<point_t, point_t>>& flags) {
  return orbit_count_on_pairs(G, flags);
}

// Transitive on ordered pairs of distinct points.
inline bool is_2transitive_on(const PermGroup& G) {
  return G.degree() >= 2 && G.is_transitive() && rank_on_pairs(G) == 2;
}

// A regular subgroup of Gamma isomorphic to G.
struct RegularEmbedding {
  std::vector<Perm> image;      // image[x] for each element x of G
  std::vector<point_t> point;   // point[x] = 0^{image[x]}
};

namespace detail {

// Calls f on every element of G with the given cycle shape: fixed-point
// free, all cycles of length len.
template <class F>
void for_each_semiregular(const PermGroup& G, std::size_t len, F&& f) {
  const StabChain& C = G.chain();
  const std::size_t n = G.degree();
  auto rec = [&](auto&& self, std::size_t level, const Perm& acc) -> void {
    if (level == C.levels.size()) {
      // acc = t_k ... t_1 composed in transversal-product order
      std::vector<bool> seen(n, false);
      for (point_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::size_t l = 0;
        for (point_t y = x; !seen[y]; y = acc[y]) {
          seen[y] = true;
          ++l;
        }
        if (l != len) return;
      }
      f(acc);
      return;
    }
    for (const Perm& u : C.levels[level].transversal) self(self, level + 1, u * acc);
  };
  rec(rec, 0, Perm(n));
}

}  // namespace detail

inline std::optional<RegularEmbedding> find_regular_subgroup(const PermGroup& Gamma,
                                                             const FiniteGroup& G,
                                                             std::size_t element_cap = 20'000'000) {
  require(Gamma.degree() == G.order(),
          "find_regular_subgroup: degree " + std::to_string(Gamma.degree()) +
              " differs from group order " + std::to_string(G.order()));
  const std::size_t n = G.order();
  auto right_embedding = [&] {
    RegularEmbedding e;
    for (elem_t x = 0; x < n; ++x) {
      e.image.push_back(multiplication_perm(G, x, Side::right));
      e.point.push_back(x);
    }
    return e;
  };
  if (n == 1) return right_embedding();
  BigInt fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  if (Gamma.order() == fact) return right_embedding();
  require(Gamma.order() <= BigInt(element_cap), "find_regular_subgroup: group too large");
  auto gens = G.generators();
  std::vector<std::vector<Perm>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t o = G.element_order(gens[i]);
    if (i > 0 && G.element_order(gens[i - 1]) == o) {
      cands[i] = cands[i - 1];
      continue;
    }
    detail::for_each_semiregular(Gamma, o, [&](const Perm& p) { cands[i].push_back(p); });
  }
  std::vector<Perm> img(gens.size());
  std::optional<RegularEmbedding> out;
  // Extends over <gens[0..upto]>; the images must act semiregularly.
  auto extend = [&](std::size_t upto, std::vector<std::optional<Perm>>& f,
                    std::vector<bool>& hit) {
    f.assign(n, std::nullopt);
    hit.assign(n, false);
    f[0] = Perm(n);
    hit[0] = true;
    std::vector<elem_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      elem_t x = queue[q];
      for (std::size_t j = 0; j <= upto; ++j) {
        elem_t y = G.mul(x, gens[j]);
        Perm py = *f[x] * img[j];
        if (!f[y]) {
          point_t pt = py[0];
          if (hit[pt]) return false;
          hit[pt] = true;
          f[y] = std::move(py);
          queue.push_back(y);
        } else if (*f[y] != py) {
          return false;
        }
      }
    }
    return true;
  };
  std::vector<std::optional<Perm>> f;
  std::vector<bool> hit;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    for (const Perm& c : cands[i]) {
      img[i] = c;
      if (!extend(i, f, hit)) continue;
      if (i + 1 == gens.size()) {
        RegularEmbedding e;
        for (elem_t x = 0; x < n; ++x) {
          e.image.push_back(*f[x]);
          e.point.push_back((*f[x])[0]);
        }
        out = std::move(e);
        return true;
      }
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

}  // namespace schur
