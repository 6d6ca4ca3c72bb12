#pragma once

// S-rings over a finite group: partitions of G with {e} a class, closed under
// inversion, whose class sums span a subring of ZG.
//
// Classes are kept in canonical order: {e} first, then by (size, smallest
// element).  Cayley convention: the scheme of an S-ring colors (g, h) by the
// class of g h^-1, so the class of g is the color of (g, e).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schur/autsearch.hpp"
#include "schur/designs.hpp"
#include "schur/error.hpp"
#include "schur/group.hpp"
#include "schur/perm.hpp"
#include "schur/scheme.hpp"

namespace schur {

using ElementPartition = std::vector<std::vector<elem_t>>;

class NotAnSRing : public Error {
 public:
  using Error::Error;
};

namespace detail {

struct SRingData {
  FiniteGroup G;
  ElementPartition classes;
  std::vector<color_t> class_of;
  std::vector<color_t> inverse;  // class index of X^-1
  std::vector<std::uint32_t> c;  // c[(x * r + y) * r + z]
};

// Sorts each class and the class list into canonical order; returns the
// error when cls is not a partition of G.
inline std::optional<std::string> normalize_partition(std::size_t n, ElementPartition& cls) {
  std::vector<int> seen(n, 0);
  for (auto& X : cls) {
    if (X.empty()) return std::string("empty class");
    std::sort(X.begin(), X.end());
    for (elem_t x : X) {
      if (x >= n) return "element " + std::to_string(x) + " out of range";
      if (seen[x]++) return "element " + std::to_string(x) + " appears twice";
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!seen[x]) return "element " + std::to_string(x) + " not covered";
  std::sort(cls.begin(), cls.end(), [](const auto& a, const auto& b) {
    bool ea = a.front() == 0, eb = b.front() == 0;
    if (ea != eb) return ea;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return std::nullopt;
}

// Builds the data, or returns the first violated axiom.
inline std::optional<std::string> build_sring(SRingData& d) {
  const FiniteGroup& G = d.G;
  const std::size_t n = G.order();
  if (auto err = normalize_partition(n, d.classes)) return err;
  if (d.classes[0].size() != 1) return std::string("{e} is not a class");
  const std::size_t r = d.classes.size();
  d.class_of.assign(n, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (elem_t x : d.classes[i]) d.class_of[x] = static_cast<color_t>(i);
  d.inverse.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& X = d.classes[i];
    color_t j = d.class_of[G.inv(X[0])];
    if (d.classes[j].size() != X.size()) return "class " + std::to_string(i) + " has no inverse class";
    for (elem_t x : X)
      if (d.class_of[G.inv(x)] != j)
        return "inverse of class " + std::to_string(i) + " is not a class";
    d.inverse[i] = j;
  }
  // For each X, count[y-class][z] = #{(x, y) : x in X, y in class, x y = z}.
  d.c.assign(r * r * r, 0);
  std::vector<std::uint32_t> count(r * n);
  for (std::size_t i = 0; i < r; ++i) {
    std::fill(count.begin(), count.end(), 0);
    for (elem_t x : d.classes[i])
      for (elem_t y = 0; y < n; ++y) ++count[d.class_of[y] * n + G.mul(x, y)];
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        const auto& Z = d.classes[k];
        std::uint32_t v = count[j * n + Z[0]];
        for (elem_t z : Z) {
          if (count[j * n + z] != v) {
            return "product of classes " + std::to_string(i) + " and " + std::to_string(j) +
                   " is not constant on class " + std::to_string(k) + " (elements " +
                   std::to_string(Z[0]) + " and " + std::to_string(z) + ")";
          }
        }
        d.c[(i * r + j) * r + k] = v;
      }
  }
  return std::nullopt;
}

}  // namespace detail

class SRing {
 public:
  SRing() = default;

  // Throws NotAnSRing naming the first violated axiom.
  static SRing from_partition(const FiniteGroup& G, ElementPartition classes) {
    auto d = std::make_shared<detail::SRingData>();
    d->G = G;
    d->classes = std::move(classes);
    if (auto err = detail::build_sring(*d)) throw NotAnSRing(*err);
    SRing A;
    A.d_ = std::move(d);
    return A;
  }

  static SRing from_class_vector(const FiniteGroup& G, std::span<const color_t> cls) {
    require(cls.size() == G.order(), "SRing: class vector length differs from group order");
    color_t m = 0;
    for (color_t c : cls) m = std::max(m, c);
    ElementPartition P(m + 1);
    for (elem_t x = 0; x < cls.size(); ++x) P[cls[x]].push_back(x);
    std::erase_if(P, [](const auto& v) { return v.empty(); });
    return from_partition(G, std::move(P));
  }

  const FiniteGroup& group() const { return d_->G; }
  std::size_t rank() const noexcept { return d_->classes.size(); }
  const ElementPartition& classes() const noexcept { return d_->classes; }
  const std::vector<elem_t>& basic_set(std::size_t i) const { return d_->classes[i]; }
  color_t class_of(elem_t g) const noexcept { return d_->class_of[g]; }
  std::span<const color_t> class_vector() const noexcept { return d_->class_of; }
  color_t inverse_class(color_t i) const noexcept { return d_->inverse[i]; }
  // Coefficient of each z in Z in the product of class sums X Y.
  std::uint32_t structure_constant(color_t x, color_t y, color_t z) const noexcept {
    const std::size_t r = rank();
    return d_->c[(x * r + y) * r + z];
  }

  friend bool operator==(const SRing& a, const SRing& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->G.order() == b.d_->G.order() && a.d_->class_of == b.d_->class_of;
  }

 private:
  std::shared_ptr<const detail::SRingData> d_;
};

struct SRingVerdict {
  std::optional<SRing> sring;
  std::string violation;
  bool ok() const noexcept { return sring.has_value(); }
};

inline SRingVerdict try_sring(const FiniteGroup& G, ElementPartition classes) {
  try {
    return {SRing::from_partition(G, std::move(classes)), {}};
  } catch (const NotAnSRing& e) {
    return {std::nullopt, e.what()};
  }
}

// First violation, or nullopt when the partition is an S-ring.
inline std::optional<std::string> validate_sring(const FiniteGroup& G, ElementPartition classes) {
  auto v = try_sring(G, std::move(classes));
  if (v.ok()) return std::nullopt;
  return v.violation;
}

// Rechecks every axiom and the counting identities from scratch.
inline std::optional<std::string> validate_sring(const SRing& A) {
  if (auto err = validate_sring(A.group(), A.classes())) return err;
  const std::size_t r = A.rank();
  for (color_t i = 0; i < r; ++i) {
    if (A.structure_constant(i, A.inverse_class(i), 0) != A.basic_set(i).size())
      return "coefficient of e in X X^-1 differs from |X| for class " + std::to_string(i);
    for (color_t j = 0; j < r; ++j) {
      std::size_t sum = 0;
      for (color_t k = 0; k < r; ++k) sum += A.structure_constant(i, j, k) * A.basic_set(k).size();
      if (sum != A.basic_set(i).size() * A.basic_set(j).size())
        return "sizes do not multiply for classes " + std::to_string(i) + ", " + std::to_string(j);
    }
  }
  return std::nullopt;
}

inline SRing group_ring(const FiniteGroup& G) {
  ElementPartition P;
  for (elem_t x = 0; x < G.order(); ++x) P.push_back({x});
  return SRing::from_partition(G, std::move(P));
}

inline SRing rank2_sring(const FiniteGroup& G) {
  ElementPartition P{{0}};
  if (G.order() > 1) {
    P.emplace_back();
    for (elem_t x = 1; x < G.order(); ++x) P.back().push_back(x);
  }
  return SRing::from_partition(G, std::move(P));
}

inline bool contains_right_regular(const PermGroup& Gamma, const FiniteGroup& G) {
  if (Gamma.degree() != G.order()) return false;
  for (elem_t g : G.generators())
    if (!Gamma.contains(multiplication_perm(G, g, Side::right))) return false;
  return true;
}

// Basic sets are the orbits of the stabilizer of e in Gamma.
inline SRing sring_from_action(const PermGroup& Gamma, const FiniteGroup& G) {
  require(Gamma.degree() == G.order(), "sring_from_action: degree differs from group order");
  require(contains_right_regular(Gamma, G), "sring_from_action: group does not contain G_right");
  PermGroup S = Gamma.stabilizer(0);
  std::vector<point_t> all(G.order());
  for (point_t x = 0; x < all.size(); ++x) all[x] = x;
  ElementPartition P;
  for (auto& o : orbits(S, all)) P.emplace_back(o.begin(), o.end());
  return SRing::from_partition(G, std::move(P));
}

inline AssociationScheme to_cayley_scheme(const SRing& A) {
  return AssociationScheme::from_coloring(A.group().order(),
                                          cayley_coloring(A.group(), A.class_vector()));
}

// Inverse of to_cayley_scheme.  Throws PreconditionError when X is not
// invariant under right multiplications.
inline SRing from_cayley_scheme(const AssociationScheme& X, const FiniteGroup& G) {
  const std::size_t n = G.order();
  require(X.size() == n, "from_cayley_scheme: scheme size differs from group order");
  for (elem_t a : G.generators())
    for (elem_t g = 0; g < n; ++g)
      for (elem_t h = 0; h < n; ++h)
        require(X.color(G.mul(g, a), G.mul(h, a)) == X.color(g, h),
                "from_cayley_scheme: scheme is not invariant under G_right");
  std::vector<color_t> cls(n);
  for (elem_t g = 0; g < n; ++g) cls[g] = X.color(g, 0);
  return SRing::from_class_vector(G, cls);
}

struct SchurityResult {
  bool schurian = false;
  PermGroup aut;              // aut of the Cayley scheme
  BigInt aut_order;
  std::size_t rank = 0;       // rank of the S-ring
  std::size_t aut_rank = 0;   // rank of inv(aut)
  // Orbits of aut_e.  When schurian these are exactly the basic sets; when
  // not, split_class is a basic set that breaks into several orbits.
  ElementPartition stabilizer_orbits;
  std::optional<color_t> split_class;
  SearchStats stats;
};

// A is schurian iff its Cayley scheme X equals inv(aut(X)); since X is
// always a fusion of inv(aut(X)) the ranks decide it.
inline SchurityResult is_schurian(const SRing& A, std::uint64_t node_cap = kDefaultNodeCap) {
  SchurityResult res;
  AssociationScheme X = to_cayley_scheme(A);
  res.aut = aut_scheme(X, &res.stats, node_cap);
  res.aut_order = res.aut.order();
  res.rank = A.rank();
  res.aut_rank = rank_on_pairs(res.aut);
  res.schurian = res.aut_rank == res.rank;
  PermGroup S = res.aut.stabilizer(0);
  std::vector<point_t> all(A.group().order());
  for (point_t x = 0; x < all.size(); ++x) all[x] = x;
  for (auto& o : orbits(S, all)) res.stabilizer_orbits.emplace_back(o.begin(), o.end());
  if (!res.schurian) {
    for (const auto& o : res.stabilizer_orbits) {
      color_t c = A.class_of(o.front());
      if (o.size() != A.basic_set(c).size()) {
        res.split_class = c;
        break;
      }
    }
  }
  return res;
}

// Over G = generalized_dihedral(H): classes {e}, A = H \ {e}, X = D g and
// Y = (H \ D) g.  Element |H| + h of G is h g.
inline SRing difference_set_sring(const DifferenceSet& S) {
  auto v = is_difference_set(S.H, S.D);
  require(v.ok(), "difference_set_sring: " + v.violation);
  FiniteGroup G = generalized_dihedral(S.H);
  const elem_t n = static_cast<elem_t>(S.n);
  ElementPartition P(4);
  P[0] = {0};
  for (elem_t h = 1; h < n; ++h) P[1].push_back(h);
  for (elem_t h = 0; h < n; ++h) {
    bool in = std::binary_search(S.D.begin(), S.D.end(), h);
    P[in ? 2 : 3].push_back(n + h);
  }
  return SRing::from_partition(G, std::move(P));
}

// The four basic sets of a difference-set S-ring, by role.
struct DifferenceSetClasses {
  color_t e = 0, A = 0, X = 0, Y = 0;
};

inline DifferenceSetClasses difference_set_roles(const SRing& R, const DifferenceSet& S) {
  require(R.rank() == 4, "difference_set_roles: rank is not 4");
  const elem_t n = static_cast<elem_t>(S.n);
  DifferenceSetClasses c;
  c.A = R.class_of(n > 1 ? 1 : 0);
  c.X = R.class_of(n + S.D.front());
  elem_t out = 0;
  while (std::binary_search(S.D.begin(), S.D.end(), out)) ++out;
  c.Y = R.class_of(n + out);
  return c;
}

// Wreath product of an S-ring over a subgroup with a scheme on the right
// cosets.  embed maps the subgroup's elements into G; top is a scheme on
// the cosets numbered by right_coset_index.  Classes: the images of the
// bottom classes, and for every nonreflexive top color c the set of g whose
// coset has color c with the coset of e.
inline SRing wreath_sring(const SRing& bottom, const GroupHom& embed,
                          const AssociationScheme& top) {
  require(embed.is_homomorphism() && embed.is_injective(),
          "wreath_sring: embedding is not an injective homomorphism");
  require(bottom.group().order() == embed.source.order(),
          "wreath_sring: embedding source differs from the bottom group");
  const FiniteGroup& G = embed.target;
  std::vector<elem_t> H(embed.image.begin(), embed.image.end());
  std::size_t m = 0;
  auto idx = right_coset_index(G, H, &m);
  require(top.size() == m, "wreath_sring: top scheme has " + std::to_string(top.size()) +
                               " points, there are " + std::to_string(m) + " cosets");
  ElementPartition P;
  for (const auto& X : bottom.classes()) {
    P.emplace_back();
    for (elem_t x : X) P.back().push_back(embed.image[x]);
  }
  std::vector<std::vector<elem_t>> lifted(top.rank());
  for (elem_t g = 0; g < G.order(); ++g) {
    color_t c = top.color(idx[g], idx[0]);
    if (c != 0) lifted[c].push_back(g);
  }
  for (auto& L : lifted)
    if (!L.empty()) P.push_back(std::move(L));
  auto v = try_sring(G, std::move(P));
  require(v.ok(), "wreath_sring: result is not an S-ring (" + v.violation + ")");
  return *v.sring;
}

}  // namespace schur
