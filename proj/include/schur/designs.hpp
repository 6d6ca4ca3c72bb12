#pragma once

// Difference sets in abelian groups, the symmetric designs they develop, and
// the automorphism-group transitivity profile of such a design.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schur/autsearch.hpp"
#include "schur/error.hpp"
#include "schur/gf.hpp"
#include "schur/group.hpp"
#include "schur/perm.hpp"

namespace schur {

// A k-subset D of an abelian group H of order n where every nonidentity
// element is a "difference" d1 d2^-1 in exactly lambda ways.
struct DifferenceSet {
  FiniteGroup H;
  std::vector<elem_t> D;  // sorted
  std::size_t n = 0, k = 0, lambda = 0;
};

struct DifferenceSetVerdict {
  std::optional<DifferenceSet> set;
  std::string violation;
  bool ok() const noexcept { return set.has_value(); }
};

// Throws PreconditionError when H is not abelian; a non-difference-set is a
// verdict, not an error.
inline DifferenceSetVerdict is_difference_set(const FiniteGroup& H, std::vector<elem_t> D) {
  require(H.is_abelian(), "is_difference_set: H must be abelian");
  const std::size_t n = H.order();
  std::sort(D.begin(), D.end());
  D.erase(std::unique(D.begin(), D.end()), D.end());
  for (elem_t d : D) require(d < n, "is_difference_set: element out of range");
  if (D.empty() || D.size() >= n) {
    return {std::nullopt, "D must be a nonempty proper subset (|D| = " +
                              std::to_string(D.size()) + ")"};
  }
  std::vector<std::size_t> hits(n, 0);
  for (elem_t a : D)
    for (elem_t b : D) ++hits[H.mul(a, H.inv(b))];
  const std::size_t lambda = hits[n > 1 ? 1 : 0];
  for (elem_t h = 1; h < n; ++h) {
    if (hits[h] != lambda) {
      return {std::nullopt, "element " + std::to_string(h) + " is hit " +
                                std::to_string(hits[h]) + " times, element 1 is hit " +
                                std::to_string(lambda) + " times"};
    }
  }
  if (lambda == 0) return {std::nullopt, "lambda = 0 (D is a singleton)"};
  DifferenceSet out{H, std::move(D), n, 0, lambda};
  out.k = out.D.size();
  return {std::move(out), {}};
}

inline DifferenceSet require_difference_set(const FiniteGroup& H, std::vector<elem_t> D) {
  auto v = is_difference_set(H, std::move(D));
  if (!v.ok()) throw PreconditionError("not a difference set: " + v.violation);
  return std::move(*v.set);
}

// Nonzero squares of GF(q), q = 3 mod 4, in the additive group of the field
// (elementary_abelian(p, m), whose encoding the field shares).
inline DifferenceSet paley_difference_set(std::uint32_t q) {
  auto pp = prime_power(q);
  require(pp.has_value(), "paley_difference_set: q is not a prime power");
  require(q % 4 == 3, "paley_difference_set: q must be 3 mod 4");
  GaloisField F(q);
  std::vector<elem_t> D;
  for (std::uint32_t e = 0; e + 1 < q; e += 2) D.push_back(F.exp(e));
  auto H = elementary_abelian(pp->first, pp->second);
  H = H.with_label(pp->second == 1 ? "C" + std::to_string(q) : "E" + std::to_string(q));
  return require_difference_set(H, std::move(D));
}

inline constexpr std::size_t kSingerCap = 512;

// Hyperplane of PG(d, q) read through a Singer cycle: with w primitive in
// GF(q^{d+1}) and n = (q^{d+1}-1)/(q-1), D = { i mod n : Tr(w^i) = 0 }.
inline DifferenceSet singer_difference_set(std::uint32_t q, std::uint32_t d) {
  require(prime_power(q).has_value(), "singer_difference_set: q is not a prime power");
  require(d >= 2, "singer_difference_set: d must be at least 2");
  std::uint64_t big = 1;
  for (std::uint32_t i = 0; i <= d; ++i) {
    big *= q;
    require(big <= (1u << 20), "singer_difference_set: field too large");
  }
  const std::size_t n = static_cast<std::size_t>((big - 1) / (q - 1));
  require(n <= kSingerCap, "singer_difference_set: n exceeds cap " + std::to_string(kSingerCap));
  GaloisField F(static_cast<std::uint32_t>(big));
  auto trace = [&](GaloisField::elem x) {
    GaloisField::elem s = 0, y = x;
    for (std::uint32_t j = 0; j <= d; ++j) {
      s = F.add(s, y);
      y = F.pow(y, q);
    }
    return s;
  };
  std::vector<elem_t> D;
  for (std::size_t i = 0; i < n; ++i)
    if (trace(F.exp(i)) == 0) D.push_back(static_cast<elem_t>(i));
  return require_difference_set(cyclic(n).with_label("C" + std::to_string(n)), std::move(D));
}

inline DifferenceSet complement(const DifferenceSet& S) {
  std::vector<elem_t> C;
  for (elem_t h = 0; h < S.n; ++h)
    if (!std::binary_search(S.D.begin(), S.D.end(), h)) C.push_back(h);
  return require_difference_set(S.H, std::move(C));
}

// Points are the elements x of H, blocks the elements h g of the coset Hg
// (indexed by h).  Point x lies on block h iff x h is in D, the additive
// reading of "y x^-1 in Dg" with y = h g.
struct Design {
  std::size_t n = 0, k = 0, lambda = 0;
  std::vector<std::uint8_t> incidence;  // incidence[x * n + b]
  bool incident(std::size_t x, std::size_t b) const { return incidence[x * n + b] != 0; }
  std::vector<std::pair<point_t, point_t>> flags() const {
    std::vector<std::pair<point_t, point_t>> out;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t b = 0; b < n; ++b)
        if (incident(x, b)) out.emplace_back(static_cast<point_t>(x), static_cast<point_t>(b));
    return out;
  }
  std::vector<std::pair<point_t, point_t>> antiflags() const {
    std::vector<std::pair<point_t, point_t>> out;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t b = 0; b < n; ++b)
        if (!incident(x, b)) out.emplace_back(static_cast<point_t>(x), static_cast<point_t>(b));
    return out;
  }
};

// Throws Error if the development is not a symmetric 2-design, which would
// mean the difference set was corrupted.
inline void check_design(const Design& B) {
  for (std::size_t x = 0; x < B.n; ++x) {
    std::size_t on = 0, through = 0;
    for (std::size_t b = 0; b < B.n; ++b) {
      on += B.incident(x, b);
      through += B.incident(b, x);
    }
    if (on != B.k || through != B.k) throw Error("design: point or block degree is not k");
  }
  for (std::size_t x = 0; x < B.n; ++x)
    for (std::size_t y = x + 1; y < B.n; ++y) {
      std::size_t common = 0;
      for (std::size_t b = 0; b < B.n; ++b) common += B.incident(x, b) && B.incident(y, b);
      if (common != B.lambda) throw Error("design: a pair of points is not on lambda blocks");
    }
}

inline Design dev(const DifferenceSet& S) {
  Design B;
  B.n = S.n;
  B.k = S.k;
  B.lambda = S.lambda;
  B.incidence.assign(S.n * S.n, 0);
  std::vector<std::uint8_t> inD(S.n, 0);
  for (elem_t d : S.D) inD[d] = 1;
  for (elem_t x = 0; x < S.n; ++x)
    for (elem_t h = 0; h < S.n; ++h) B.incidence[x * S.n + h] = inD[S.H.mul(x, h)];
  check_design(B);
  return B;
}

inline constexpr std::size_t kDesignPointCap = 64;

// Points 0..n-1, blocks n..2n-1.  Pair colors: 0 diagonal, 1 point-point,
// 2 block-block, 3/4 flag (point->block / block->point), 5/6 antiflag.
inline ColoredStructure incidence_structure(const Design& B) {
  const std::size_t n = B.n, N = 2 * n;
  ColoredStructure S;
  S.n = N;
  S.vcol.assign(N, 0);
  for (std::size_t b = 0; b < n; ++b) S.vcol[n + b] = 1;
  S.M.assign(N * N, 0);
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v) {
      std::uint32_t c;
      if (u == v) c = 0;
      else if (u < n && v < n) c = 1;
      else if (u >= n && v >= n) c = 2;
      else if (u < n) c = B.incident(u, v - n) ? 3 : 5;
      else c = B.incident(v, u - n) ? 4 : 6;
      S.M[u * N + v] = c;
    }
  return S;
}

struct TransitivityProfile {
  bool two_transitive = false;
  bool flag_transitive = false;
  bool antiflag_transitive = false;
  BigInt aut_order;
  std::size_t point_rank = 0;  // rank of aut(B) on points
  std::size_t flag_orbits = 0, antiflag_orbits = 0;
  bool all() const noexcept { return two_transitive && flag_transitive && antiflag_transitive; }
};

// aut(B) acting on points and blocks (never swapping the two), on the 2n
// vertices of the incidence structure.
inline PermGroup design_automorphisms(const Design& B, SearchStats* stats = nullptr,
                                      std::uint64_t node_cap = kDefaultNodeCap) {
  require(B.n <= kDesignPointCap,
          "design automorphisms: more than " + std::to_string(kDesignPointCap) + " points");
  return automorphism_group(incidence_structure(B), stats, node_cap);
}

inline TransitivityProfile transitivity_profile(const Design& B, SearchStats* stats = nullptr,
                                                std::uint64_t node_cap = kDefaultNodeCap) {
  PermGroup A = design_automorphisms(B, stats, node_cap);
  const std::size_t n = B.n;
  std::vector<Perm> on_points;
  for (const Perm& g : A.generators()) {
    std::vector<point_t> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = g[x];
    on_points.emplace_back(std::move(img));
  }
  PermGroup P(n, std::move(on_points));
  TransitivityProfile out;
  out.aut_order = A.order();
  out.point_rank = P.is_transitive() ? rank_on_pairs(P) : 0;
  out.two_transitive = is_2transitive_on(P);
  auto shift = [n](std::vector<std::pair<point_t, point_t>> v) {
    for (auto& [x, b] : v) b = static_cast<point_t>(b + n);
    return v;
  };
  auto fl = shift(B.flags()), af = shift(B.antiflags());
  out.flag_orbits = fl.empty() ? 0 : flag_orbit_count(A, fl);
  out.antiflag_orbits = af.empty() ? 0 : flag_orbit_count(A, af);
  out.flag_transitive = out.flag_orbits == 1;
  out.antiflag_transitive = out.antiflag_orbits == 1;
  return out;
}

}  // namespace schur
