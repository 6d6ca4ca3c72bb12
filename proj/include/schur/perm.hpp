#pragma once

// Permutations of {0..n-1} and permutation groups backed by a
// deterministic Schreier-Sims stabilizer chain.
//
// Convention: permutations act on the right and compose left to right,
// x^(a*b) = (x^a)^b.  Perm::operator[] returns x^p.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schur/error.hpp"

namespace schur {

using point_t = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDegreeCap = 10000;

class Perm {
 public:
  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), point_t{0});
  }

  explicit Perm(std::vector<point_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (point_t x : images_) {
      require(x < images_.size() && !seen[x], "Perm: images are not a bijection");
      seen[x] = true;
    }
  }

  // Cycles are 0-based point lists; unlisted points are fixed.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<point_t>>& cycles) {
    Perm p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        point_t a = cyc[i];
        point_t b = cyc[(i + 1) % cyc.size()];
        require(a < degree && b < degree, "Perm: cycle point out of range");
        require(!used[a], "Perm: point repeated in cycles");
        used[a] = true;
        p.images_[a] = b;
      }
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  point_t operator[](point_t x) const noexcept { return images_[x]; }
  std::span<const point_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (point_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  // (a*b) maps x to b(a(x)).
  Perm operator*(const Perm& b) const {
    require(degree() == b.degree(), "Perm: degree mismatch in compose");
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[i] = b.images_[images_[i]];
    }
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[images_[i]] = static_cast<point_t>(i);
    }
    return r;
  }

  Perm pow(long long e) const {
    Perm base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Perm acc(degree());
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t l = 1;
    for (point_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (point_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      l = std::lcm(l, len);
    }
    return l;
  }

  std::vector<std::vector<point_t>> cycles() const {
    std::vector<std::vector<point_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (point_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<point_t> c;
      for (point_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::string to_string(bool one_based = true) const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i] + (one_based ? 1 : 0);
      }
      os << ')';
    }
    return os.str();
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<point_t> images_;
};

inline Perm compose(const Perm& a, const Perm& b) { return a * b; }

// Base and strong generating set with explicit transversals.
struct StabChain {
  struct Level {
    point_t base = 0;
    std::vector<Perm> gens;
    std::vector<std::int32_t> slot;  // point -> index into orbit, or -1
    std::vector<point_t> orbit;
    std::vector<Perm> transversal;   // base^transversal[k] == orbit[k]
    std::vector<Perm> transversal_inv;

    void rebuild(std::size_t degree) {
      slot.assign(degree, -1);
      orbit.assign(1, base);
      transversal.assign(1, Perm(degree));
      transversal_inv.assign(1, Perm(degree));
      slot[base] = 0;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const Perm& s : gens) {
          point_t y = s[orbit[i]];
          if (slot[y] >= 0) continue;
          slot[y] = static_cast<std::int32_t>(orbit.size());
          orbit.push_back(y);
          transversal.push_back(transversal[i] * s);
          transversal_inv.push_back(transversal.back().inverse());
        }
      }
    }
  };

  std::size_t degree = 0;
  std::vector<Level> levels;

  // Strips g through levels [from, end).  Returns the residue and the level
  // index where stripping stopped (levels.size() when it went through).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from = 0) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      const Level& L = levels[i];
      point_t x = g[L.base];
      if (L.slot[x] < 0) return {std::move(g), i};
      g = g * L.transversal_inv[static_cast<std::size_t>(L.slot[x])];
    }
    return {std::move(g), levels.size()};
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree) return false;
    auto [r, j] = strip(g);
    return j == levels.size() && r.is_identity();
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& L : levels) o *= L.orbit.size();
    return o;
  }

  std::vector<point_t> base() const {
    std::vector<point_t> b;
    for (const auto& L : levels) b.push_back(L.base);
    return b;
  }

  // Deterministic Schreier-Sims.  Base points are the prefix followed by the
  // smallest points moved by the generators that need a new level.
  static StabChain build(std::size_t degree, const std::vector<Perm>& gens,
                         std::span<const point_t> base_prefix = {}) {
    StabChain C;
    C.degree = degree;
    auto first_moved = [&](const Perm& p) -> point_t {
      for (point_t x = 0; x < degree; ++x) {
        if (p[x] != x) return x;
      }
      return 0;
    };
    for (point_t b : base_prefix) {
      Level L;
      L.base = b;
      C.levels.push_back(std::move(L));
    }
    std::vector<Perm> S;
    for (const Perm& g : gens) {
      require(g.degree() == degree, "PermGroup: generator degree mismatch");
      if (!g.is_identity()) S.push_back(g);
    }
    for (const Perm& s : S) {
      bool fixes_all = true;
      for (const auto& L : C.levels) {
        if (s[L.base] != L.base) {
          fixes_all = false;
          break;
        }
      }
      if (fixes_all) {
        Level L;
        L.base = first_moved(s);
        C.levels.push_back(std::move(L));
      }
    }
    for (std::size_t i = 0; i < C.levels.size(); ++i) {
      for (const Perm& s : S) {
        bool fixes = true;
        for (std::size_t j = 0; j < i; ++j) {
          if (s[C.levels[j].base] != C.levels[j].base) {
            fixes = false;
            break;
          }
        }
        if (fixes) C.levels[i].gens.push_back(s);
      }
      C.levels[i].rebuild(degree);
    }

    // checked[i] counts (orbit point, generator) pairs at level i already
    // known to give Schreier generators that strip to the identity.
    std::vector<std::size_t> checked(C.levels.size(), 0);
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(C.levels.size()) - 1;
    while (i >= 0) {
      Level& L = C.levels[static_cast<std::size_t>(i)];
      bool clean = true;
      const std::size_t ngens = L.gens.size();
      const std::size_t total = L.orbit.size() * ngens;
      for (std::size_t idx = checked[static_cast<std::size_t>(i)]; idx < total;
           ++idx) {
        std::size_t oi = idx / ngens;
        const Perm& s = L.gens[idx % ngens];
        point_t img = s[L.orbit[oi]];
        Perm h = L.transversal[oi] * s *
                 L.transversal_inv[static_cast<std::size_t>(L.slot[img])];
        if (h.is_identity()) continue;
        auto [res, j] = C.strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (j == C.levels.size() && res.is_identity()) continue;
        checked[static_cast<std::size_t>(i)] = idx;
        clean = false;
        if (j == C.levels.size()) {
          Level nl;
          nl.base = first_moved(res);
          C.levels.push_back(std::move(nl));
          checked.push_back(0);
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          C.levels[l].gens.push_back(res);
          C.levels[l].rebuild(degree);
          checked[l] = 0;
        }
        i = static_cast<std::ptrdiff_t>(j);
        break;
      }
      if (clean) {
        checked[static_cast<std::size_t>(i)] = total;
        --i;
      }
    }
    // Drop trailing trivial levels introduced only by the prefix.
    while (!C.levels.empty() && C.levels.back().orbit.size() == 1 &&
           C.levels.size() > base_prefix.size()) {
      C.levels.pop_back();
    }
    return C;
  }

  // Trusts that strong_gens with the given base form a BSGS.
  static StabChain from_bsgs(std::size_t degree, std::span<const point_t> base,
                             const std::vector<Perm>& strong_gens) {
    StabChain C;
    C.degree = degree;
    for (std::size_t i = 0; i < base.size(); ++i) {
      Level L;
      L.base = base[i];
      for (const Perm& s : strong_gens) {
        bool fixes = true;
        for (std::size_t j = 0; j < i; ++j) {
          if (s[base[j]] != base[j]) {
            fixes = false;
            break;
          }
        }
        if (fixes) L.gens.push_back(s);
      }
      L.rebuild(degree);
      C.levels.push_back(std::move(L));
    }
    return C;
  }
};

class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}

  PermGroup(std::size_t degree, std::vector<Perm> gens)
      : degree_(degree), gens_(std::move(gens)), lazy_(std::make_shared<Lazy>()) {
    require(degree <= kDegreeCap, "PermGroup: degree cap exceeded");
    for (const Perm& g : gens_) {
      require(g.degree() == degree_, "PermGroup: generator degree mismatch");
    }
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  static PermGroup symmetric(std::size_t n) {
    std::vector<Perm> g;
    if (n >= 2) g.push_back(Perm::from_cycles(n, {{0, 1}}));
    if (n >= 3) {
      std::vector<point_t> c(n);
      std::iota(c.begin(), c.end(), point_t{0});
      g.push_back(Perm::from_cycles(n, {c}));
    }
    return PermGroup(n, std::move(g));
  }

  static PermGroup from_bsgs(std::size_t degree, std::vector<point_t> base,
                             std::vector<Perm> strong_gens) {
    PermGroup G(degree, strong_gens);
    auto chain = std::make_shared<StabChain>(
        StabChain::from_bsgs(degree, base, strong_gens));
    std::call_once(G.lazy_->once, [&] { G.lazy_->chain = chain; });
    return G;
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return gens_; }

  const StabChain& chain() const {
    std::call_once(lazy_->once, [this] {
      lazy_->chain = std::make_shared<StabChain>(StabChain::build(degree_, gens_));
    });
    return *lazy_->chain;
  }

  BigInt order() const { return chain().order(); }
  bool contains(const Perm& p) const { return chain().contains(p); }
  std::vector<point_t> base() const { return chain().base(); }

  // Orbit of x, in BFS order.
  std::vector<point_t> orbit(point_t x) const {
    std::vector<bool> seen(degree_, false);
    std::vector<point_t> out{x};
    seen[x] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (const Perm& g : gens_) {
        point_t y = g[out[i]];
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
    return out;
  }

  // Partition of all points into orbits; each orbit sorted, orbits ordered by
  // their smallest point.
  std::vector<std::vector<point_t>> orbits() const {
    std::vector<std::vector<point_t>> out;
    std::vector<bool> seen(degree_, false);
    for (point_t x = 0; x < degree_; ++x) {
      if (seen[x]) continue;
      auto o = orbit(x);
      for (point_t y : o) seen[y] = true;
      std::sort(o.begin(), o.end());
      out.push_back(std::move(o));
    }
    return out;
  }

  bool is_transitive() const {
    return degree_ <= 1 || orbit(0).size() == degree_;
  }

  bool is_regular() const {
    return is_transitive() && order() == BigInt(degree_);
  }

  PermGroup stabilizer(point_t x) const {
    require(x < degree_, "stabilizer: point out of range");
    point_t pre[1] = {x};
    StabChain C = StabChain::build(degree_, gens_, pre);
    // Strong generators of the stabilizer: every level's generators below
    // the first (deeper levels may hold ones that level 1 lacks).
    std::vector<Perm> g;
    std::vector<point_t> base;
    for (std::size_t i = 1; i < C.levels.size(); ++i) {
      base.push_back(C.levels[i].base);
      for (const Perm& s : C.levels[i].gens) {
        if (std::find(g.begin(), g.end(), s) == g.end()) g.push_back(s);
      }
    }
    return from_bsgs(degree_, std::move(base), std::move(g));
  }

  // Every element, in transversal-product order.  Throws when the group is
  // larger than cap.
  std::vector<Perm> elements(std::size_t cap = 10'000'000) const {
    const StabChain& C = chain();
    require(C.order() <= BigInt(cap), "elements: group order exceeds cap");
    std::vector<Perm> out{Perm(degree_)};
    for (auto it = C.levels.rbegin(); it != C.levels.rend(); ++it) {
      std::vector<Perm> next;
      next.reserve(out.size() * it->orbit.size());
      for (const Perm& u : it->transversal) {
        for (const Perm& g : out) next.push_back(g * u);
      }
      out = std::move(next);
    }
    return out;
  }

  template <class Rng>
  Perm random_element(Rng& rng) const {
    const StabChain& C = chain();
    Perm g(degree_);
    for (auto it = C.levels.rbegin(); it != C.levels.rend(); ++it) {
      std::uniform_int_distribution<std::size_t> d(0, it->transversal.size() - 1);
      g = g * it->transversal[d(rng)];
    }
    return g;
  }

 private:
  struct Lazy {
    std::once_flag once;
    std::shared_ptr<const StabChain> chain;
  };

  std::size_t degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<Lazy> lazy_;
};

// Orbits of <generators> restricted to the union of the orbits of seeds.
inline std::vector<std::vector<point_t>> orbits(const PermGroup& G,
                                                std::span<const point_t> seeds) {
  std::vector<std::vector<point_t>> out;
  std::vector<bool> seen(G.degree(), false);
  for (point_t s : seeds) {
    if (seen[s]) continue;
    auto o = G.orbit(s);
    for (point_t y : o) seen[y] = true;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline PermGroup point_stabilizer(const PermGroup& G, point_t x) {
  return G.stabilizer(x);
}

// Orbit label for every ordered pair (x, y), stored at x * n + y.  Labels are
// assigned in order of the first pair (row-major) of each orbit.
inline std::vector<std::uint32_t> pair_orbit_labels(const PermGroup& G,
                                                    std::size_t* count = nullptr) {
  const std::size_t n = G.degree();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(n * n, kUnset);
  std::uint32_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (label[start] != kUnset) continue;
    label[start] = next;
    stack.assign(1, start);
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      point_t x = static_cast<point_t>(c / n);
      point_t y = static_cast<point_t>(c % n);
      for (const Perm& g : G.generators()) {
        std::size_t d = static_cast<std::size_t>(g[x]) * n + g[y];
        if (label[d] == kUnset) {
          label[d] = next;
          stack.push_back(d);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

// Number of orbits on Omega x Omega; 2 exactly when G is 2-transitive.
inline std::size_t rank_on_pairs(const PermGroup& G) {
  std::size_t r = 0;
  pair_orbit_labels(G, &r);
  return r;
}

inline bool is_transitive(const PermGroup& G) { return G.is_transitive(); }
inline bool is_regular(const PermGroup& G) { return G.is_regular(); }

// H wr Q in its imprimitive action: point (b, i) is b * deg(H) + i, H acts
// inside every block and Q permutes the blocks.
inline PermGroup wreath_product(const PermGroup& H, const PermGroup& Q) {
  const std::size_t nh = H.degree(), nq = Q.degree(), n = nh * nq;
  std::vector<Perm> gens;
  for (std::size_t b = 0; b < nq; ++b)
    for (const Perm& h : H.generators()) {
      std::vector<point_t> img(n);
      for (point_t x = 0; x < n; ++x) img[x] = x / nh == b ? b * nh + h[x % nh] : x;
      gens.emplace_back(std::move(img));
    }
  for (const Perm& q : Q.generators()) {
    std::vector<point_t> img(n);
    for (point_t x = 0; x < n; ++x) img[x] = static_cast<point_t>(q[x / nh] * nh + x % nh);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace schur
