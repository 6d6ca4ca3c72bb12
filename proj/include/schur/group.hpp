#pragma once

// Finite groups given by multiplication tables.  Element 0 is always the
// identity.  Constructors fix their element ordering so that fixtures and
// golden outputs stay stable:
//   cyclic(n)             : k  <->  a^k
//   elementary_abelian    : base-p digits (matches GaloisField encoding)
//   direct_product(A, B)  : (a, b)  <->  b * |A| + a
//   semidirect(N, H, ...) : (n, h)  <->  h * |N| + n, so N comes first
//   generalized_dihedral  : H first, then the coset Hg

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "schur/error.hpp"
#include "schur/gf.hpp"
#include "schur/perm.hpp"

namespace schur {

using elem_t = std::uint32_t;

class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup() : d_(trivial_data()) {}

  // Validates the group axioms; associativity is checked exhaustively up to
  // order 64 and on a fixed pseudo-random sample of triples above that.
  static FiniteGroup from_table(std::size_t n, std::vector<elem_t> mul,
                                std::string label = {}) {
    require(n >= 1, "FiniteGroup: empty group");
    require(mul.size() == n * n, "FiniteGroup: table size mismatch");
    for (elem_t x : mul) require(x < n, "FiniteGroup: table entry out of range");
    auto d = std::make_shared<Data>();
    d->n = n;
    d->mul = std::move(mul);
    d->label = std::move(label);
    for (elem_t a = 0; a < n; ++a) {
      require(d->mul[a] == a && d->mul[a * n] == a,
              "FiniteGroup: element 0 is not the identity");
    }
    d->inv.assign(n, 0);
    for (elem_t a = 0; a < n; ++a) {
      std::vector<bool> seen(n, false);
      bool found = false;
      for (elem_t b = 0; b < n; ++b) {
        elem_t c = d->mul[a * n + b];
        require(!seen[c], "FiniteGroup: row is not a permutation");
        seen[c] = true;
        if (c == 0) {
          d->inv[a] = b;
          found = true;
        }
      }
      require(found, "FiniteGroup: missing inverse");
    }
    for (elem_t a = 0; a < n; ++a) {
      require(d->mul[d->inv[a] * n + a] == 0, "FiniteGroup: inverse not two-sided");
    }
    auto assoc = [&](elem_t a, elem_t b, elem_t c) {
      return d->mul[d->mul[a * n + b] * n + c] == d->mul[a * n + d->mul[b * n + c]];
    };
    if (n <= 64) {
      for (elem_t a = 0; a < n; ++a)
        for (elem_t b = 0; b < n; ++b)
          for (elem_t c = 0; c < n; ++c)
            require(assoc(a, b, c), "FiniteGroup: table is not associative");
    } else {
      std::mt19937_64 rng(0x5eedULL + n);
      std::uniform_int_distribution<elem_t> pick(0, static_cast<elem_t>(n - 1));
      for (int t = 0; t < 20000; ++t) {
        require(assoc(pick(rng), pick(rng), pick(rng)),
                "FiniteGroup: table is not associative");
      }
    }
    return FiniteGroup(std::move(d));
  }

  std::size_t order() const noexcept { return d_->n; }
  static constexpr elem_t identity() noexcept { return 0; }
  elem_t mul(elem_t a, elem_t b) const noexcept { return d_->mul[a * d_->n + b]; }
  elem_t inv(elem_t a) const noexcept { return d_->inv[a]; }
  // g^-1 a g
  elem_t conj(elem_t a, elem_t g) const noexcept { return mul(mul(inv(g), a), g); }
  std::span<const elem_t> table() const noexcept { return d_->mul; }

  const std::string& label() const noexcept { return d_->label; }
  FiniteGroup with_label(std::string label) const {
    auto d = std::make_shared<Data>(*d_);
    d->label = std::move(label);
    return FiniteGroup(std::move(d));
  }

  elem_t pow(elem_t a, long long k) const {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    elem_t r = 0;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  std::size_t element_order(elem_t a) const {
    std::size_t k = 1;
    for (elem_t x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (elem_t a = 0; a < order(); ++a)
      for (elem_t b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  std::vector<elem_t> center() const {
    std::vector<elem_t> z;
    for (elem_t a = 0; a < order(); ++a) {
      bool central = true;
      for (elem_t b = 0; b < order() && central; ++b) central = mul(a, b) == mul(b, a);
      if (central) z.push_back(a);
    }
    return z;
  }

  std::size_t exponent() const {
    std::size_t e = 1;
    for (elem_t a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
    return e;
  }

  // element order -> number of elements of that order
  std::map<std::size_t, std::size_t> order_statistics() const {
    std::map<std::size_t, std::size_t> m;
    for (elem_t a = 0; a < order(); ++a) ++m[element_order(a)];
    return m;
  }

  bool is_subgroup(std::span<const elem_t> s) const {
    std::vector<bool> in(order(), false);
    for (elem_t x : s) {
      if (x >= order()) return false;
      in[x] = true;
    }
    if (s.empty() || !in[0]) return false;
    for (elem_t a : s)
      for (elem_t b : s)
        if (!in[mul(a, b)]) return false;
    return true;
  }

  bool is_normal(std::span<const elem_t> s) const {
    if (!is_subgroup(s)) return false;
    std::vector<bool> in(order(), false);
    for (elem_t x : s) in[x] = true;
    for (elem_t g = 0; g < order(); ++g)
      for (elem_t a : s)
        if (!in[conj(a, g)]) return false;
    return true;
  }

  // A small generating set: elements taken greedily by decreasing order
  // (ties by index) whenever they enlarge the generated subgroup.
  std::vector<elem_t> generators() const {
    std::vector<elem_t> by_order(order());
    std::iota(by_order.begin(), by_order.end(), elem_t{0});
    std::vector<std::size_t> ord(order());
    for (elem_t a = 0; a < order(); ++a) ord[a] = element_order(a);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](elem_t a, elem_t b) { return ord[a] > ord[b]; });
    std::vector<elem_t> gens;
    std::vector<bool> in(order(), false);
    in[0] = true;
    std::size_t size = 1;
    for (elem_t g : by_order) {
      if (size == order()) break;
      if (in[g]) continue;
      gens.push_back(g);
      std::vector<elem_t> members;
      for (elem_t x = 0; x < order(); ++x)
        if (in[x]) members.push_back(x);
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (elem_t s : gens) {
          elem_t y = mul(members[i], s);
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
          }
        }
      }
      size = members.size();
    }
    return gens;
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<elem_t> mul;
    std::vector<elem_t> inv;
    std::string label;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static std::shared_ptr<const Data> trivial_data() {
    static const auto t = [] {
      auto d = std::make_shared<Data>();
      d->n = 1;
      d->mul = {0};
      d->inv = {0};
      return d;
    }();
    return t;
  }

  std::shared_ptr<const Data> d_;
};

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<elem_t> image;

  bool is_homomorphism() const {
    if (image.size() != source.order()) return false;
    for (elem_t a = 0; a < source.order(); ++a)
      for (elem_t b = 0; b < source.order(); ++b)
        if (image[source.mul(a, b)] != target.mul(image[a], image[b])) return false;
    return true;
  }

  bool is_injective() const {
    std::vector<bool> seen(target.order(), false);
    for (elem_t x : image) {
      if (seen[x]) return false;
      seen[x] = true;
    }
    return true;
  }
};

namespace detail {

template <class MulFn>
FiniteGroup table_from(std::size_t n, MulFn&& f, std::string label) {
  std::vector<elem_t> t(n * n);
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) t[a * n + b] = f(a, b);
  return FiniteGroup::from_table(n, std::move(t), std::move(label));
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace detail

inline FiniteGroup cyclic(std::size_t n) {
  require(n >= 1, "cyclic: order must be positive");
  return detail::table_from(
      n, [n](elem_t a, elem_t b) { return static_cast<elem_t>((a + b) % n); },
      "C" + std::to_string(n));
}

inline FiniteGroup elementary_abelian(std::uint32_t p, std::uint32_t k) {
  require(is_prime(p), "elementary_abelian: p must be prime");
  const std::size_t n = detail::ipow(p, k);
  return detail::table_from(
      n,
      [p, k](elem_t a, elem_t b) {
        elem_t r = 0, w = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
          r += ((a % p + b % p) % p) * w;
          a /= p;
          b /= p;
          w *= p;
        }
        return r;
      },
      "E" + std::to_string(n));
}

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const std::size_t na = A.order();
  std::string label = A.label().empty() || B.label().empty()
                          ? std::string{}
                          : A.label() + "x" + B.label();
  return detail::table_from(
      na * B.order(),
      [&](elem_t x, elem_t y) {
        elem_t a1 = static_cast<elem_t>(x % na), b1 = static_cast<elem_t>(x / na);
        elem_t a2 = static_cast<elem_t>(y % na), b2 = static_cast<elem_t>(y / na);
        return static_cast<elem_t>(B.mul(b1, b2) * na + A.mul(a1, a2));
      },
      label);
}

inline bool is_automorphism(const FiniteGroup& N, std::span<const elem_t> f) {
  if (f.size() != N.order()) return false;
  std::vector<bool> seen(N.order(), false);
  for (elem_t x : f) {
    if (x >= N.order() || seen[x]) return false;
    seen[x] = true;
  }
  for (elem_t a = 0; a < N.order(); ++a)
    for (elem_t b = 0; b < N.order(); ++b)
      if (f[N.mul(a, b)] != N.mul(f[a], f[b])) return false;
  return true;
}

// N x| H with multiplication (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2).
// action[h] must be an automorphism of N and action[h1 h2] = action[h1] o
// action[h2].
inline FiniteGroup semidirect(const FiniteGroup& N, const FiniteGroup& H,
                              const std::vector<std::vector<elem_t>>& action,
                              std::string label = {}) {
  require(action.size() == H.order(), "semidirect: one automorphism per element of H");
  for (const auto& f : action) {
    require(is_automorphism(N, f), "semidirect: action is not by automorphisms");
  }
  for (elem_t h1 = 0; h1 < H.order(); ++h1)
    for (elem_t h2 = 0; h2 < H.order(); ++h2)
      for (elem_t x = 0; x < N.order(); ++x)
        require(action[H.mul(h1, h2)][x] == action[h1][action[h2][x]],
                "semidirect: action is not a homomorphism");
  const std::size_t nn = N.order();
  return detail::table_from(
      nn * H.order(),
      [&](elem_t x, elem_t y) {
        elem_t n1 = static_cast<elem_t>(x % nn), h1 = static_cast<elem_t>(x / nn);
        elem_t n2 = static_cast<elem_t>(y % nn), h2 = static_cast<elem_t>(y / nn);
        return static_cast<elem_t>(H.mul(h1, h2) * nn + N.mul(n1, action[h1][n2]));
      },
      std::move(label));
}

// N x| C_m with the generator of C_m acting as alpha.
inline FiniteGroup semidirect_cyclic(const FiniteGroup& N, std::size_t m,
                                     const std::vector<elem_t>& alpha,
                                     std::string label = {}) {
  std::vector<std::vector<elem_t>> action(m);
  std::vector<elem_t> id(N.order());
  std::iota(id.begin(), id.end(), elem_t{0});
  action[0] = id;
  for (std::size_t j = 1; j < m; ++j) {
    action[j].resize(N.order());
    for (elem_t x = 0; x < N.order(); ++x) action[j][x] = alpha[action[j - 1][x]];
  }
  for (elem_t x = 0; x < N.order(); ++x) {
    require(alpha[action[m - 1][x]] == x, "semidirect_cyclic: alpha^m is not trivial");
  }
  return semidirect(N, cyclic(m), action, std::move(label));
}

inline FiniteGroup generalized_dihedral(const FiniteGroup& H) {
  require(H.is_abelian(), "generalized_dihedral: H must be abelian");
  std::vector<elem_t> inversion(H.order());
  for (elem_t x = 0; x < H.order(); ++x) inversion[x] = H.inv(x);
  std::string label = H.label().empty() ? std::string{} : "Dih(" + H.label() + ")";
  return semidirect_cyclic(H, 2, inversion, label);
}

// Dihedral group of the given order 2n.
inline FiniteGroup dihedral(std::size_t order) {
  require(order >= 2 && order % 2 == 0, "dihedral: order must be even and >= 2");
  return generalized_dihedral(cyclic(order / 2)).with_label("D" + std::to_string(order));
}

// Q_{2^k}, k >= 3: <a, b | a^{2^{k-1}} = 1, b^2 = a^{2^{k-2}}, a^b = a^-1>.
inline FiniteGroup quaternion_generalized(std::size_t order) {
  auto pp = prime_power(order);
  require(pp && pp->first == 2 && pp->second >= 3,
          "quaternion_generalized: order must be 2^k with k >= 3");
  const std::size_t h = order / 2;
  return detail::table_from(
      order,
      [h](elem_t x, elem_t y) {
        std::size_t i1 = x % h, j1 = x / h, i2 = y % h, j2 = y / h;
        std::size_t i = (j1 ? i1 + h - i2 : i1 + i2) % h;
        std::size_t j = j1 + j2;
        if (j >= 2) {
          j -= 2;
          i = (i + h / 2) % h;
        }
        return static_cast<elem_t>(j * h + i);
      },
      "Q" + std::to_string(order));
}

// SD_{2^k}, k >= 4: <a, b | a^{2^{k-1}} = b^2 = 1, a^b = a^{-1 + 2^{k-2}}>.
inline FiniteGroup semidihedral(std::size_t order) {
  auto pp = prime_power(order);
  require(pp && pp->first == 2 && pp->second >= 4,
          "semidihedral: order must be 2^k with k >= 4");
  const std::size_t h = order / 2;
  std::vector<elem_t> alpha(h);
  for (std::size_t x = 0; x < h; ++x) alpha[x] = static_cast<elem_t>(x * (h / 2 - 1) % h);
  return semidirect_cyclic(cyclic(h), 2, alpha, "SD" + std::to_string(order));
}

// M_{p^k}: <a, b | a^{p^{k-1}} = b^p = 1, a^b = a^{1 + p^{k-2}}>, k >= 3
// (k > 3 when p = 2).
inline FiniteGroup modular_M(std::uint32_t p, std::uint32_t k) {
  require(is_prime(p), "modular_M: p must be prime");
  require(k >= 3 && (p != 2 || k > 3), "modular_M: k out of range");
  const std::size_t h = detail::ipow(p, k - 1);
  const std::size_t r = 1 + detail::ipow(p, k - 2);
  std::vector<elem_t> alpha(h);
  for (std::size_t x = 0; x < h; ++x) alpha[x] = static_cast<elem_t>(x * r % h);
  return semidirect_cyclic(cyclic(h), p, alpha, "M" + std::to_string(h * p));
}

// <a, b, c | a^4 = b^2 = c^2 = [a,b] = [a,c] = 1, [b,c] = a^2>; element
// a^i b^j c^l has index i + 4j + 8l.
inline FiniteGroup g16() {
  return detail::table_from(
      16,
      [](elem_t x, elem_t y) {
        elem_t i1 = x % 4, j1 = (x / 4) % 2, l1 = x / 8;
        elem_t i2 = y % 4, j2 = (y / 4) % 2, l2 = y / 8;
        // c^l b^j = b^j c^l a^{2lj}
        elem_t i = (i1 + i2 + 2 * l1 * j2) % 4;
        return static_cast<elem_t>(i + 4 * ((j1 + j2) % 2) + 8 * ((l1 + l2) % 2));
      },
      "G16");
}

// E_{p^k} x| C_m with C_m acting as multiplication by an element of order m
// in GF(p^k)^*.  Element (v, j) has index j * p^k + v.
inline FiniteGroup frobenius_field(std::uint32_t p, std::uint32_t k, std::uint32_t m) {
  require(is_prime(p) && k >= 1, "frobenius_field: p must be prime and k >= 1");
  const std::uint32_t q = static_cast<std::uint32_t>(detail::ipow(p, k));
  require(m >= 1 && (q - 1) % m == 0, "frobenius_field: m must divide p^k - 1");
  GaloisField F(q);
  const GaloisField::elem zeta = F.pow(F.primitive(), (q - 1) / m);
  std::vector<GaloisField::elem> zpow(m);
  zpow[0] = 1;
  for (std::uint32_t j = 1; j < m; ++j) zpow[j] = F.mul(zpow[j - 1], zeta);
  std::string label = "E" + std::to_string(q) + ":C" + std::to_string(m);
  return detail::table_from(
      static_cast<std::size_t>(q) * m,
      [&](elem_t x, elem_t y) {
        elem_t v1 = x % q, j1 = x / q, v2 = y % q, j2 = y / q;
        return static_cast<elem_t>(((j1 + j2) % m) * q + F.add(v1, F.mul(zpow[j1], v2)));
      },
      label);
}

// PSL_2(q) from 2x2 matrices over GF(q) modulo scalars; identity first, then
// the remaining classes ordered by the smaller of the two encodings.
inline FiniteGroup psl2(std::uint32_t q) {
  auto pp = prime_power(q);
  require(pp.has_value(), "psl2: q must be a prime power");
  require(q <= 13, "psl2: q above desk-scale cap (13)");
  GaloisField F(q);
  using M = std::array<GaloisField::elem, 4>;
  auto code = [q](const M& m) {
    return ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
  };
  auto neg = [&](const M& m) { return M{F.neg(m[0]), F.neg(m[1]), F.neg(m[2]), F.neg(m[3])}; };
  auto canon = [&](const M& m) { return std::min(code(m), code(neg(m))); };
  std::vector<M> reps;
  std::vector<std::uint32_t> keys;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          M m{a, b, c, d};
          if (F.sub(F.mul(a, d), F.mul(b, c)) != 1) continue;
          if (canon(m) != code(m)) continue;
          reps.push_back(m);
        }
  const M ident{1, 0, 0, 1};
  std::stable_partition(reps.begin(), reps.end(),
                        [&](const M& m) { return code(m) == code(ident); });
  std::unordered_map<std::uint32_t, elem_t> index;
  for (elem_t i = 0; i < reps.size(); ++i) index[code(reps[i])] = i;
  auto mulm = [&](const M& x, const M& y) {
    return M{F.add(F.mul(x[0], y[0]), F.mul(x[1], y[2])),
             F.add(F.mul(x[0], y[1]), F.mul(x[1], y[3])),
             F.add(F.mul(x[2], y[0]), F.mul(x[3], y[2])),
             F.add(F.mul(x[2], y[1]), F.mul(x[3], y[3]))};
  };
  return detail::table_from(
      reps.size(),
      [&](elem_t x, elem_t y) { return index.at(canon(mulm(reps[x], reps[y]))); },
      "PSL2(" + std::to_string(q) + ")");
}

// The group generated by permutations; elements in BFS order from the
// identity.  Also returns the permutation of each element when asked.
inline FiniteGroup from_permutations(std::size_t degree, const std::vector<Perm>& gens,
                                     std::string label = {},
                                     std::vector<Perm>* elements_out = nullptr,
                                     std::size_t cap = 5000) {
  std::vector<Perm> elems{Perm(degree)};
  std::map<Perm, elem_t> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens) {
      Perm y = elems[i] * g;
      if (index.emplace(y, static_cast<elem_t>(elems.size())).second) {
        elems.push_back(std::move(y));
        require(elems.size() <= cap, "from_permutations: group order exceeds cap");
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<elem_t> t(n * n);
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) t[a * n + b] = index.at(elems[a] * elems[b]);
  if (elements_out) *elements_out = elems;
  return FiniteGroup::from_table(n, std::move(t), std::move(label));
}

inline FiniteGroup symmetric_group(std::size_t n) {
  return from_permutations(n, PermGroup::symmetric(n).generators(), "S" + std::to_string(n));
}

inline FiniteGroup alternating_group(std::size_t n) {
  require(n >= 3, "alternating_group: n >= 3");
  std::vector<Perm> gens;
  for (point_t i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return from_permutations(n, gens, "A" + std::to_string(n));
}

inline std::vector<std::vector<elem_t>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<std::vector<elem_t>> out;
  std::vector<bool> seen(G.order(), false);
  for (elem_t x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    std::vector<elem_t> cls;
    for (elem_t g = 0; g < G.order(); ++g) {
      elem_t y = G.conj(x, g);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

// Sorted elements of <seeds>.
inline std::vector<elem_t> subgroup_generated(const FiniteGroup& G,
                                              std::span<const elem_t> seeds) {
  std::vector<bool> in(G.order(), false);
  std::vector<elem_t> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (elem_t s : seeds) {
      elem_t y = G.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// A subgroup as a group in its own right; element i is the i-th smallest
// member, so the identity stays at 0.
inline FiniteGroup subgroup_as_group(const FiniteGroup& G, std::span<const elem_t> S,
                                     std::string label = {}) {
  require(G.is_subgroup(S), "subgroup_as_group: not a subgroup");
  std::vector<elem_t> members(S.begin(), S.end());
  std::sort(members.begin(), members.end());
  std::vector<elem_t> pos(G.order(), 0);
  for (elem_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
  const std::size_t m = members.size();
  std::vector<elem_t> t(m * m);
  for (elem_t a = 0; a < m; ++a)
    for (elem_t b = 0; b < m; ++b) t[a * m + b] = pos[G.mul(members[a], members[b])];
  return FiniteGroup::from_table(m, std::move(t), std::move(label));
}

// Right cosets H g, indexed by their smallest element (the coset of e first).
// Returns the coset index of every element.
inline std::vector<std::uint32_t> right_coset_index(const FiniteGroup& G,
                                                    std::span<const elem_t> H,
                                                    std::size_t* count = nullptr) {
  require(G.is_subgroup(H), "right cosets: H is not a subgroup");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> idx(G.order(), kUnset);
  std::uint32_t next = 0;
  for (elem_t g = 0; g < G.order(); ++g) {
    if (idx[g] != kUnset) continue;
    for (elem_t h : H) idx[G.mul(h, g)] = next;
    ++next;
  }
  if (count) *count = next;
  return idx;
}

inline std::vector<std::uint32_t> quotient_map(const FiniteGroup& G,
                                               std::span<const elem_t> N) {
  require(G.is_normal(N), "quotient: N is not normal");
  return right_coset_index(G, N);
}

inline FiniteGroup quotient(const FiniteGroup& G, std::span<const elem_t> N) {
  std::size_t m = 0;
  require(G.is_normal(N), "quotient: N is not normal");
  auto idx = right_coset_index(G, N, &m);
  std::vector<elem_t> rep(m);
  for (elem_t g = G.order(); g-- > 0;) rep[idx[g]] = g;
  return detail::table_from(
      m, [&](elem_t a, elem_t b) { return idx[G.mul(rep[a], rep[b])]; }, {});
}

namespace detail {

// Backtracking over generator images.  Calls visit(image) for every
// injective homomorphism from A onto a subgroup of B of size |A| that maps
// generator i into candidates(i); stops when visit returns false.
template <class Visit>
void hom_search(const FiniteGroup& A, const FiniteGroup& B,
                const std::vector<elem_t>& gens,
                const std::vector<std::vector<elem_t>>& cands, Visit&& visit) {
  const std::size_t n = A.order();
  constexpr elem_t kUnset = ~elem_t{0};
  std::vector<elem_t> img_gen(gens.size());
  bool stop = false;

  // Extends the map over <gens[0..i]> by BFS; false on conflict.
  auto extend = [&](std::size_t upto, std::vector<elem_t>& f) {
    f.assign(n, kUnset);
    std::vector<bool> used(B.order(), false);
    f[0] = 0;
    used[0] = true;
    std::vector<elem_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      elem_t x = queue[q];
      for (std::size_t j = 0; j <= upto; ++j) {
        elem_t y = A.mul(x, gens[j]);
        elem_t fy = B.mul(f[x], img_gen[j]);
        if (f[y] == kUnset) {
          if (used[fy]) return false;
          used[fy] = true;
          f[y] = fy;
          queue.push_back(y);
        } else if (f[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<elem_t> f;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    for (elem_t c : cands[i]) {
      img_gen[i] = c;
      if (!extend(i, f)) continue;
      if (i + 1 == gens.size()) {
        if (!visit(f)) {
          stop = true;
          return;
        }
      } else {
        self(self, i + 1);
        if (stop) return;
      }
    }
  };
  if (gens.empty()) {
    visit(std::vector<elem_t>{0});
    return;
  }
  rec(rec, 0);
}

inline std::vector<std::size_t> class_size_of(const FiniteGroup& G) {
  std::vector<std::size_t> s(G.order());
  for (const auto& c : conjugacy_classes(G))
    for (elem_t x : c) s[x] = c.size();
  return s;
}

}  // namespace detail

// An isomorphism A -> B (the lexicographically least by generator images),
// or nullopt after exhausting the search.
inline std::optional<GroupHom> is_isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order() != B.order()) return std::nullopt;
  if (A.order_statistics() != B.order_statistics()) return std::nullopt;
  if (A.is_abelian() != B.is_abelian()) return std::nullopt;
  auto csA = detail::class_size_of(A), csB = detail::class_size_of(B);
  {
    auto a = csA, b = csB;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  auto gens = A.generators();
  std::vector<std::vector<elem_t>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t o = A.element_order(gens[i]);
    for (elem_t y = 0; y < B.order(); ++y)
      if (B.element_order(y) == o && csB[y] == csA[gens[i]]) cands[i].push_back(y);
  }
  std::optional<GroupHom> out;
  detail::hom_search(A, B, gens, cands, [&](const std::vector<elem_t>& f) {
    out = GroupHom{A, B, f};
    return false;
  });
  return out;
}

// All automorphisms of G as image tables, the identity first.
inline std::vector<std::vector<elem_t>> automorphisms(const FiniteGroup& G,
                                                      std::size_t cap = 2'000'000) {
  auto gens = G.generators();
  auto cs = detail::class_size_of(G);
  std::vector<std::vector<elem_t>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t o = G.element_order(gens[i]);
    for (elem_t y = 0; y < G.order(); ++y)
      if (G.element_order(y) == o && cs[y] == cs[gens[i]]) cands[i].push_back(y);
  }
  std::vector<std::vector<elem_t>> out;
  detail::hom_search(G, G, gens, cands, [&](const std::vector<elem_t>& f) {
    out.push_back(f);
    if (out.size() > cap) throw BudgetExceeded("automorphisms: count exceeds cap");
    return true;
  });
  std::stable_partition(out.begin(), out.end(), [](const std::vector<elem_t>& f) {
    for (elem_t i = 0; i < f.size(); ++i)
      if (f[i] != i) return false;
    return true;
  });
  return out;
}

enum class Side { right, left };

// x -> x g (right) or x -> g^-1 x (left); both are right actions.
inline Perm multiplication_perm(const FiniteGroup& G, elem_t g, Side side) {
  std::vector<point_t> img(G.order());
  for (elem_t x = 0; x < G.order(); ++x)
    img[x] = side == Side::right ? G.mul(x, g) : G.mul(G.inv(g), x);
  return Perm(std::move(img));
}

inline PermGroup regular_representation(const FiniteGroup& G, Side side = Side::right) {
  std::vector<Perm> gens;
  for (elem_t g : G.generators()) gens.push_back(multiplication_perm(G, g, side));
  return PermGroup(G.order(), std::move(gens));
}

// Action of G on right cosets of H by right multiplication; coset numbering
// from right_coset_index.
inline PermGroup coset_action(const FiniteGroup& G, std::span<const elem_t> H) {
  std::size_t m = 0;
  auto idx = right_coset_index(G, H, &m);
  std::vector<elem_t> rep(m);
  for (elem_t g = G.order(); g-- > 0;) rep[idx[g]] = g;
  std::vector<Perm> gens;
  for (elem_t a : G.generators()) {
    std::vector<point_t> img(m);
    for (std::size_t c = 0; c < m; ++c) img[c] = idx[G.mul(rep[c], a)];
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(m, std::move(gens));
}

// Named groups used by the reproduction tables.  Tags are small-group
// catalogue ids, carried as metadata only.
inline FiniteGroup catalogue(std::size_t order, std::size_t id) {
  auto tag = [&](const FiniteGroup& G) {
    return G.with_label("SG(" + std::to_string(order) + "," + std::to_string(id) + ")");
  };
  auto c2 = cyclic(2);
  auto s3 = dihedral(6);
  auto inversion = [](const FiniteGroup& N) {
    std::vector<elem_t> f(N.order());
    for (elem_t x = 0; x < N.order(); ++x) f[x] = N.inv(x);
    return f;
  };
  switch (order * 100 + id) {
    case 1603: {
      // (C4 x C2) x| C2, generator acts by a -> ab, b -> b.
      auto N = direct_product(cyclic(4), c2);
      std::vector<elem_t> alpha(8);
      for (elem_t x = 0; x < 8; ++x) {
        elem_t i = x % 4, j = x / 4;
        alpha[x] = static_cast<elem_t>(((i + j) % 2) * 4 + i);
      }
      return tag(semidirect_cyclic(N, 2, alpha));
    }
    case 1604: {
      auto N = cyclic(4);
      auto inv4 = inversion(N);
      return tag(semidirect_cyclic(N, 4, inv4));
    }
    case 1606: return tag(modular_M(2, 4));
    case 1608: return tag(semidihedral(16));
    case 1609: return tag(quaternion_generalized(16));
    case 1611: return tag(direct_product(c2, dihedral(8)));
    case 1612: return tag(direct_product(c2, quaternion_generalized(8)));
    case 1613: return tag(g16());
    case 1803: return tag(direct_product(cyclic(3), s3));
    case 1804: return tag(generalized_dihedral(elementary_abelian(3, 2)));
    case 2701: return tag(cyclic(27));
    case 2703: {
      // (C3 x C3) x| C3, generator acts by (x, y) -> (x, x + y).
      auto N = elementary_abelian(3, 2);
      std::vector<elem_t> alpha(9);
      for (elem_t v = 0; v < 9; ++v) {
        elem_t x = v % 3, y = v / 3;
        alpha[v] = static_cast<elem_t>(x + 3 * ((x + y) % 3));
      }
      return tag(semidirect_cyclic(N, 3, alpha));
    }
    case 2704: return tag(modular_M(3, 3));
    case 2412: return tag(symmetric_group(4));
    case 2413: return tag(direct_product(c2, alternating_group(4)));
    case 2410: return tag(direct_product(cyclic(3), dihedral(8)));
    case 2411: return tag(direct_product(cyclic(3), quaternion_generalized(8)));
    case 2405: return tag(direct_product(cyclic(4), s3));
    case 2414: return tag(direct_product(elementary_abelian(2, 2), s3));
    case 2401: {
      auto N = cyclic(3);
      auto inv3 = inversion(N);
      std::vector<std::vector<elem_t>> act(8);
      for (std::size_t j = 0; j < 8; ++j) {
        act[j].resize(3);
        for (elem_t x = 0; x < 3; ++x) act[j][x] = j % 2 ? inv3[x] : x;
      }
      return tag(semidirect(N, cyclic(8), act));
    }
    case 2407: {
      auto N = cyclic(3);
      auto inv3 = inversion(N);
      return tag(direct_product(c2, semidirect_cyclic(N, 4, inv3)));
    }
    case 2403: {
      // SL_2(3) on the 8 nonzero vectors of GF(3)^2, vector (a, b) -> 3a + b - 1.
      auto act = [](int m00, int m01, int m10, int m11) {
        std::vector<point_t> img(8);
        for (int v = 1; v < 9; ++v) {
          int a = v / 3, b = v % 3;
          int a2 = (a * m00 + b * m10) % 3, b2 = (a * m01 + b * m11) % 3;
          img[v - 1] = static_cast<point_t>(3 * a2 + b2 - 1);
        }
        return Perm(std::move(img));
      };
      return tag(from_permutations(8, {act(1, 1, 0, 1), act(1, 0, 1, 1)}));
    }
    case 2404:
    case 2408: {
      // C3 x| Q8 or C3 x| D8, inverting outside a subgroup K of index 2
      // (cyclic of order 4 in Q8, a Klein four-group in D8).
      auto H = id == 4 ? quaternion_generalized(8) : dihedral(8);
      std::vector<elem_t> K;
      if (id == 4) {
        elem_t a = 1;
        while (H.element_order(a) != 4) ++a;
        K = subgroup_generated(H, std::vector<elem_t>{a});
      } else {
        K = {0, 2, 4, 6};  // e, r^2, g, r^2 g
      }
      require(H.is_subgroup(K) && K.size() == 4, "catalogue: bad kernel");
      auto N = cyclic(3);
      auto inv3 = inversion(N);
      std::vector<std::vector<elem_t>> actions(8);
      for (elem_t h = 0; h < 8; ++h) {
        bool in = std::find(K.begin(), K.end(), h) != K.end();
        actions[h] = in ? std::vector<elem_t>{0, 1, 2} : inv3;
      }
      return tag(semidirect(N, H, actions));
    }
    default:
      break;
  }
  throw PreconditionError("catalogue: no constructor for SG(" + std::to_string(order) +
                          "," + std::to_string(id) + ")");
}

}  // namespace schur
