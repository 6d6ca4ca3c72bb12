#pragma once

// Association schemes as colorings of Omega x Omega.
//
// Every AssociationScheme is validated on construction and carries a
// canonical color order: 0 is the diagonal, the remaining colors sorted by
// (valency, first cell in row-major order).  Two schemes compare equal iff
// their canonical color tables agree.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "schur/error.hpp"
#include "schur/group.hpp"
#include "schur/perm.hpp"

namespace schur {

using color_t = std::uint32_t;

class AssociationScheme;

namespace detail {

struct SchemeData {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<color_t> color;
  std::vector<color_t> transpose;
  std::vector<std::size_t> valency;
  std::vector<std::uint32_t> p;  // p[(k * r + i) * r + j] = p^k_ij
};

// Relabels raw colors canonically.  Returns an error message when the
// diagonal is not a color class of its own.
inline std::optional<std::string> canonicalize(std::size_t n, std::span<const color_t> raw,
                                               std::vector<color_t>& out, std::size_t& rank) {
  if (raw.size() != n * n) return "coloring has " + std::to_string(raw.size()) +
                                  " cells, expected " + std::to_string(n * n);
  if (n == 0) return "empty point set";
  const color_t diag = raw[0];
  for (std::size_t x = 0; x < n; ++x) {
    if (raw[x * n + x] != diag) {
      return "diagonal is not monochrome at (" + std::to_string(x) + "," + std::to_string(x) + ")";
    }
  }
  std::map<color_t, std::pair<std::size_t, std::size_t>> info;  // raw -> (count, first cell)
  for (std::size_t c = 0; c < n * n; ++c) {
    auto [it, fresh] = info.try_emplace(raw[c], 0, c);
    ++it->second.first;
    if (raw[c] == diag && c / n != c % n) {
      return "diagonal color also used off the diagonal at (" + std::to_string(c / n) + "," +
             std::to_string(c % n) + ")";
    }
  }
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, color_t>> order;
  for (auto& [col, cf] : info)
    if (col != diag) order.push_back({cf, col});
  std::sort(order.begin(), order.end());
  std::map<color_t, color_t> relabel{{diag, 0}};
  for (std::size_t i = 0; i < order.size(); ++i) relabel[order[i].second] = static_cast<color_t>(i + 1);
  rank = order.size() + 1;
  out.resize(n * n);
  for (std::size_t c = 0; c < n * n; ++c) out[c] = relabel[raw[c]];
  return std::nullopt;
}

// Fills transpose, valency and intersection numbers of a canonical coloring,
// or reports the first violated axiom.
inline std::optional<std::string> analyze(SchemeData& d) {
  const std::size_t n = d.n, r = d.r;
  const auto& c = d.color;
  constexpr color_t kUnset = ~color_t{0};
  d.transpose.assign(r, kUnset);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      color_t a = c[x * n + y], b = c[y * n + x];
      if (d.transpose[a] == kUnset) {
        d.transpose[a] = b;
      } else if (d.transpose[a] != b) {
        return "transpose of color " + std::to_string(a) + " is not a single color (pair (" +
               std::to_string(x) + "," + std::to_string(y) + "))";
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (d.transpose[d.transpose[i]] != i) {
      return "transpose map is not an involution at color " + std::to_string(i);
    }
  }
  d.valency.assign(r, 0);
  std::vector<std::size_t> row(r);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t y = 0; y < n; ++y) ++row[c[x * n + y]];
    for (std::size_t i = 0; i < r; ++i) {
      if (x == 0) {
        d.valency[i] = row[i];
      } else if (row[i] != d.valency[i]) {
        return "color " + std::to_string(i) + " has non-constant valency (row " +
               std::to_string(x) + ")";
      }
    }
  }
  d.p.assign(r * r * r, 0);
  std::vector<char> have(r, 0);
  std::vector<std::uint32_t> cnt(r * r, 0);
  std::vector<std::size_t> touched;
  touched.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const color_t k = c[x * n + y];
      touched.clear();
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t cell = c[x * n + z] * r + c[z * n + y];
        if (cnt[cell]++ == 0) touched.push_back(cell);
      }
      std::uint32_t* pk = &d.p[k * r * r];
      if (!have[k]) {
        have[k] = 1;
        for (std::size_t t : touched) pk[t] = cnt[t];
      } else {
        for (std::size_t t : touched) {
          if (pk[t] != cnt[t]) {
            std::size_t i = t / r, j = t % r;
            std::string msg = "intersection number p^" + std::to_string(k) + "_{" +
                              std::to_string(i) + "," + std::to_string(j) +
                              "} is not constant (pair (" + std::to_string(x) + "," +
                              std::to_string(y) + ") gives " + std::to_string(cnt[t]) +
                              ", expected " + std::to_string(pk[t]) + ")";
            for (std::size_t u : touched) cnt[u] = 0;
            return msg;
          }
        }
      }
      for (std::size_t t : touched) cnt[t] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Thrown when a coloring handed to a constructor is not an association
// scheme.  The message names the violated axiom.
class NotAScheme : public Error {
 public:
  using Error::Error;
};

class AssociationScheme {
 public:
  AssociationScheme() = default;

  // Throws NotAScheme when the coloring violates an axiom.
  static AssociationScheme from_coloring(std::size_t n, std::span<const color_t> raw) {
    auto d = std::make_shared<detail::SchemeData>();
    d->n = n;
    if (auto err = detail::canonicalize(n, raw, d->color, d->r)) throw NotAScheme(*err);
    if (auto err = detail::analyze(*d)) throw NotAScheme(*err);
    AssociationScheme X;
    X.d_ = std::move(d);
    return X;
  }

  std::size_t size() const noexcept { return d_ ? d_->n : 0; }
  std::size_t rank() const noexcept { return d_ ? d_->r : 0; }
  color_t color(std::size_t x, std::size_t y) const noexcept { return d_->color[x * d_->n + y]; }
  std::span<const color_t> colors() const noexcept { return d_->color; }
  color_t transpose(color_t i) const noexcept { return d_->transpose[i]; }
  std::size_t valency(color_t i) const noexcept { return d_->valency[i]; }
  std::vector<std::size_t> valencies() const { return d_->valency; }
  bool is_symmetric(color_t i) const noexcept { return transpose(i) == i; }

  // p^k_{ij}
  std::uint32_t p(color_t i, color_t j, color_t k) const noexcept {
    return d_->p[(k * d_->r + i) * d_->r + j];
  }

  friend bool operator==(const AssociationScheme& a, const AssociationScheme& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->n == b.d_->n && a.d_->color == b.d_->color;
  }

 private:
  std::shared_ptr<const detail::SchemeData> d_;
};

// A fusion or parse attempt: either a scheme or the reason it is not one.
struct SchemeVerdict {
  std::optional<AssociationScheme> scheme;
  std::string violation;
  bool ok() const noexcept { return scheme.has_value(); }
};

inline SchemeVerdict try_scheme(std::size_t n, std::span<const color_t> raw) {
  try {
    return {AssociationScheme::from_coloring(n, raw), {}};
  } catch (const NotAScheme& e) {
    return {std::nullopt, e.what()};
  }
}

// First violated axiom of a raw coloring, or nullopt when it is a scheme.
inline std::optional<std::string> validate_coloring(std::size_t n, std::span<const color_t> raw) {
  auto v = try_scheme(n, raw);
  if (v.ok()) return std::nullopt;
  return v.violation;
}

inline std::optional<std::string> validate(const AssociationScheme& X) {
  return validate_coloring(X.size(), X.colors());
}

// The scheme whose colors are the 2-orbits of a transitive group.
inline AssociationScheme orbital_scheme(const PermGroup& G) {
  require(G.degree() >= 1, "orbital_scheme: empty domain");
  require(G.is_transitive(), "orbital_scheme: group is not transitive");
  auto labels = pair_orbit_labels(G);
  return AssociationScheme::from_coloring(G.degree(), labels);
}

inline AssociationScheme rank2_scheme(std::size_t n) {
  std::vector<color_t> c(n * n, 1);
  for (std::size_t x = 0; x < n; ++x) c[x * n + x] = 0;
  return AssociationScheme::from_coloring(n, c);
}

// Every color a singleton class, i.e. the identity partition.
using ColorPartition = std::vector<std::vector<color_t>>;

// Class index of every color under Pi; Pi covers the nonreflexive colors and
// must be transpose-closed.  Color 0 always gets class 0.
inline std::vector<color_t> partition_map(const AssociationScheme& X, const ColorPartition& pi) {
  const std::size_t r = X.rank();
  constexpr color_t kUnset = ~color_t{0};
  std::vector<color_t> cls(r, kUnset);
  cls[0] = 0;
  for (std::size_t b = 0; b < pi.size(); ++b) {
    require(!pi[b].empty(), "fusion: empty class in partition");
    for (color_t c : pi[b]) {
      require(c >= 1 && c < r, "fusion: color " + std::to_string(c) + " out of range");
      require(cls[c] == kUnset, "fusion: color " + std::to_string(c) + " listed twice");
      cls[c] = static_cast<color_t>(b + 1);
    }
  }
  for (std::size_t c = 1; c < r; ++c) {
    require(cls[c] != kUnset, "fusion: color " + std::to_string(c) + " not covered");
  }
  for (const auto& block : pi) {
    color_t t = cls[X.transpose(block[0])];
    for (color_t c : block) {
      require(cls[X.transpose(c)] == t, "fusion: partition is not transpose-closed");
    }
  }
  return cls;
}

// Merges colors by Pi.  "Not a scheme" is a verdict, not an error; only a
// malformed Pi throws.
inline SchemeVerdict fusion(const AssociationScheme& X, const ColorPartition& pi) {
  auto cls = partition_map(X, pi);
  std::vector<color_t> raw(X.colors().begin(), X.colors().end());
  for (auto& c : raw) c = cls[c];
  return try_scheme(X.size(), raw);
}

// Intersection-number level test for a fusion: the summed block numbers must
// be constant across each block.  Agrees with fusion(X, pi).ok().
inline bool fusion_is_scheme_by_numbers(const AssociationScheme& X, const ColorPartition& pi) {
  auto cls = partition_map(X, pi);
  const std::size_t r = X.rank(), m = pi.size() + 1;
  std::vector<std::int64_t> q(r * m * m, 0);
  for (color_t k = 0; k < r; ++k)
    for (color_t i = 0; i < r; ++i)
      for (color_t j = 0; j < r; ++j) q[(k * m + cls[i]) * m + cls[j]] += X.p(i, j, k);
  std::vector<std::optional<std::size_t>> first(m);
  for (color_t k = 0; k < r; ++k) {
    auto& f = first[cls[k]];
    if (!f) {
      f = k;
      continue;
    }
    for (std::size_t t = 0; t < m * m; ++t)
      if (q[k * m * m + t] != q[*f * m * m + t]) return false;
  }
  return true;
}

// X is finer than Y: every color of X lies inside a single color of Y.
inline bool is_refinement(const AssociationScheme& X, const AssociationScheme& Y) {
  if (X.size() != Y.size()) return false;
  constexpr color_t kUnset = ~color_t{0};
  std::vector<color_t> to(X.rank(), kUnset);
  for (std::size_t c = 0; c < X.colors().size(); ++c) {
    color_t a = X.colors()[c], b = Y.colors()[c];
    if (to[a] == kUnset) {
      to[a] = b;
    } else if (to[a] != b) {
      return false;
    }
  }
  return true;
}

// Colors renamed by pi (color i becomes pi[i]), then re-canonicalized.
inline AssociationScheme relabel_colors(const AssociationScheme& X, std::span<const color_t> pi) {
  std::vector<color_t> raw(X.colors().begin(), X.colors().end());
  for (auto& c : raw) c = pi[c];
  return AssociationScheme::from_coloring(X.size(), raw);
}

// Image of X under a point permutation g: the new color of (x^g, y^g) is the
// old color of (x, y).
inline AssociationScheme permute_points(const AssociationScheme& X, const Perm& g) {
  const std::size_t n = X.size();
  require(g.degree() == n, "permute_points: degree mismatch");
  std::vector<color_t> raw(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) raw[g[x] * n + g[y]] = X.color(x, y);
  return AssociationScheme::from_coloring(n, raw);
}

// ----- named discriminators -------------------------------------------------

// R_c plus the diagonal is an equivalence relation, so R_c is a disjoint
// union of complete graphs.  Returns the number of cliques, or 0 if not.
inline std::size_t clique_union_count(const AssociationScheme& X, color_t c) {
  if (c == 0 || !X.is_symmetric(c)) return 0;
  const std::size_t n = X.size();
  std::vector<bool> seen(n, false);
  std::size_t cliques = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> block{x};
    for (std::size_t y = 0; y < n; ++y)
      if (X.color(x, y) == c) block.push_back(y);
    for (std::size_t a : block) {
      if (seen[a]) return 0;
      seen[a] = true;
      for (std::size_t b : block)
        if (a != b && X.color(a, b) != c) return 0;
    }
    ++cliques;
  }
  return cliques;
}

inline bool is_clique_union(const AssociationScheme& X, color_t c) {
  return clique_union_count(X, c) > 0;
}

// The graph with edge set R_c is connected (edges taken undirected).
inline bool is_connected(const AssociationScheme& X, color_t c) {
  const std::size_t n = X.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y) {
      if (!seen[y] && (X.color(x, y) == c || X.color(y, x) == c)) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

// R_c is symmetric and connected: a simple connected graph on Omega.
inline bool is_simple_connected_graph(const AssociationScheme& X, color_t c) {
  return c != 0 && X.is_symmetric(c) && is_connected(X, c);
}

// One requirement on a labeling.  Labels are 1-based positions in the
// valency pattern of the nonreflexive colors.
struct LabelConstraint {
  enum class Kind { clique_union, not_clique_union, simple_connected, not_simple_connected,
                    transpose_of };
  Kind kind;
  std::size_t label;
  std::size_t other = 0;  // for transpose_of: R_label^* = R_other

  static LabelConstraint clique_union(std::size_t l) { return {Kind::clique_union, l}; }
  static LabelConstraint not_clique_union(std::size_t l) { return {Kind::not_clique_union, l}; }
  static LabelConstraint connected(std::size_t l) { return {Kind::simple_connected, l}; }
  static LabelConstraint not_connected(std::size_t l) { return {Kind::not_simple_connected, l}; }
  static LabelConstraint transpose(std::size_t l, std::size_t o) {
    return {Kind::transpose_of, l, o};
  }
};

// Every assignment label -> nonreflexive color with valency[label] =
// pattern[label - 1] that satisfies all constraints.  Element 0 of each
// labeling is color 0, so labeling[l] is the color of label l.
inline std::vector<std::vector<color_t>> select_colors_by_valency(
    const AssociationScheme& X, const std::vector<std::size_t>& pattern,
    const std::vector<LabelConstraint>& constraints = {}) {
  const std::size_t k = pattern.size();
  std::vector<std::vector<color_t>> out;
  if (k + 1 != X.rank()) return out;
  {
    std::vector<std::size_t> want = pattern, have;
    for (color_t c = 1; c < X.rank(); ++c) have.push_back(X.valency(c));
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) return out;
  }
  auto holds = [&](const LabelConstraint& lc, const std::vector<color_t>& lab) {
    color_t c = lab[lc.label];
    switch (lc.kind) {
      case LabelConstraint::Kind::clique_union: return is_clique_union(X, c);
      case LabelConstraint::Kind::not_clique_union: return !is_clique_union(X, c);
      case LabelConstraint::Kind::simple_connected: return is_simple_connected_graph(X, c);
      case LabelConstraint::Kind::not_simple_connected: return !is_simple_connected_graph(X, c);
      case LabelConstraint::Kind::transpose_of: return X.transpose(c) == lab[lc.other];
    }
    return false;
  };
  for (const auto& lc : constraints) {
    require(lc.label >= 1 && lc.label <= k &&
                (lc.kind != LabelConstraint::Kind::transpose_of ||
                 (lc.other >= 1 && lc.other <= k)),
            "select_colors_by_valency: constraint label out of range");
  }
  std::vector<color_t> lab(k + 1, 0);
  std::vector<bool> used(X.rank(), false);
  auto rec = [&](auto&& self, std::size_t l) -> void {
    if (l > k) {
      for (const auto& lc : constraints)
        if (!holds(lc, lab)) return;
      out.push_back(lab);
      return;
    }
    for (color_t c = 1; c < X.rank(); ++c) {
      if (used[c] || X.valency(c) != pattern[l - 1]) continue;
      used[c] = true;
      lab[l] = c;
      self(self, l + 1);
      used[c] = false;
    }
  };
  rec(rec, 1);
  return out;
}

// Translates a partition of labels into one of colors.
inline ColorPartition labels_to_colors(const std::vector<color_t>& labeling,
                                       const std::vector<std::vector<std::size_t>>& pi_labels) {
  ColorPartition pi;
  for (const auto& block : pi_labels) {
    std::vector<color_t> b;
    for (std::size_t l : block) {
      require(l >= 1 && l < labeling.size(), "label " + std::to_string(l) + " out of range");
      b.push_back(labeling[l]);
    }
    pi.push_back(std::move(b));
  }
  return pi;
}

// Fuses by a labeled partition across every admissible labeling.  Throws
// when no labeling exists or when labelings disagree on the fused scheme.
inline SchemeVerdict fuse_by_labels(const AssociationScheme& X,
                                    const std::vector<std::vector<color_t>>& labelings,
                                    const std::vector<std::vector<std::size_t>>& pi_labels) {
  require(!labelings.empty(), "fusion by labels: no labeling matches the valency pattern");
  std::optional<SchemeVerdict> first;
  for (const auto& lab : labelings) {
    auto v = fusion(X, labels_to_colors(lab, pi_labels));
    if (!first) {
      first = v;
      continue;
    }
    bool same = v.ok() == first->ok() && (!v.ok() || *v.scheme == *first->scheme);
    if (!same) throw PreconditionError("fusion by labels: result depends on the labeling");
  }
  return *first;
}

// ----- constructions --------------------------------------------------------

// Points (b, i) -> b * n_H + i.  Inside a block the color is X_H's; between
// distinct blocks it is r_H + X_Q(b, b') - 1.
inline AssociationScheme wreath(const AssociationScheme& XH, const AssociationScheme& XQ) {
  const std::size_t nh = XH.size(), nq = XQ.size(), n = nh * nq;
  const std::size_t rh = XH.rank();
  std::vector<color_t> raw(n * n);
  for (std::size_t b = 0; b < nq; ++b)
    for (std::size_t i = 0; i < nh; ++i)
      for (std::size_t b2 = 0; b2 < nq; ++b2)
        for (std::size_t j = 0; j < nh; ++j) {
          color_t c = b == b2 ? XH.color(i, j) : static_cast<color_t>(rh + XQ.color(b, b2) - 1);
          raw[(b * nh + i) * n + b2 * nh + j] = c;
        }
  return AssociationScheme::from_coloring(n, raw);
}

// Coloring (g, h) -> cls[g h^-1] on the elements of G.
inline std::vector<color_t> cayley_coloring(const FiniteGroup& G, std::span<const color_t> cls) {
  const std::size_t n = G.order();
  std::vector<color_t> raw(n * n);
  for (elem_t g = 0; g < n; ++g)
    for (elem_t h = 0; h < n; ++h) raw[g * n + h] = cls[G.mul(g, G.inv(h))];
  return raw;
}

inline AssociationScheme class_scheme(const FiniteGroup& G) {
  std::vector<color_t> cls(G.order());
  auto classes = conjugacy_classes(G);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (elem_t x : classes[i]) cls[x] = static_cast<color_t>(i);
  return AssociationScheme::from_coloring(G.order(), cayley_coloring(G, cls));
}

struct Rank4Fusion {
  AssociationScheme scheme;
  // Blocks of nonidentity class sizes merged into each nonreflexive color.
  std::vector<std::vector<std::size_t>> size_blocks;
  // Whether the fusion is the class scheme itself.
  bool equals_class_scheme = false;
};

// Rank-4 fusions of class_scheme(G) in which every color is a union of
// whole size-cells (all classes of one size taken together).
inline std::vector<Rank4Fusion> rank4_size_respecting_fusions(const FiniteGroup& G) {
  AssociationScheme X = class_scheme(G);
  std::map<std::size_t, std::vector<color_t>> cells;
  for (color_t c = 1; c < X.rank(); ++c) cells[X.valency(c)].push_back(c);
  std::vector<std::size_t> sizes;
  std::vector<std::vector<color_t>> cell_colors;
  for (auto& [s, cs] : cells) {
    sizes.push_back(s);
    cell_colors.push_back(cs);
  }
  const std::size_t m = sizes.size();
  std::vector<Rank4Fusion> out;
  if (m < 3) return out;
  // Restricted-growth strings of length m with exactly 3 blocks.
  std::vector<std::size_t> a(m, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
    if (i == m) {
      if (blocks != 3) return;
      ColorPartition pi(3);
      std::vector<std::vector<std::size_t>> sb(3);
      for (std::size_t t = 0; t < m; ++t) {
        for (color_t c : cell_colors[t]) pi[a[t]].push_back(c);
        sb[a[t]].push_back(sizes[t]);
      }
      for (auto& b : pi) std::sort(b.begin(), b.end());
      bool closed = true;
      for (auto& b : pi)
        for (color_t c : b)
          if (!std::binary_search(b.begin(), b.end(), X.transpose(c))) closed = false;
      if (!closed) return;
      auto v = fusion(X, pi);
      if (v.ok()) out.push_back({*v.scheme, sb, *v.scheme == X});
      return;
    }
    for (std::size_t b = 0; b <= std::min<std::size_t>(blocks, 2); ++b) {
      a[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace schur
