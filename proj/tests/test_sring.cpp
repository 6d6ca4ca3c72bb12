#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "schur/sring.hpp"

using namespace schur;

namespace {

std::vector<FiniteGroup> small_groups() {
  return {cyclic(4), elementary_abelian(2, 2), cyclic(6), dihedral(6), dihedral(8),
          quaternion_generalized(8), cyclic(9), dihedral(10), alternating_group(4),
          g16(), dihedral(16), direct_product(cyclic(2), dihedral(8))};
}

}  // namespace

TEST(SRing, ValidateExamples) {
  auto C4 = cyclic(4);
  EXPECT_TRUE(validate_sring(C4, {{0}, {1}, {2, 3}}).has_value());
  EXPECT_FALSE(validate_sring(C4, {{0}, {2}, {1, 3}}).has_value());
  EXPECT_TRUE(validate_sring(C4, {{0, 1}, {2, 3}}).has_value());
  EXPECT_TRUE(validate_sring(C4, {{0}, {1, 2}, {3}}).has_value());
  EXPECT_TRUE(validate_sring(C4, {{0}, {1, 2, 3}, {1}}).has_value());
  for (const auto& G : small_groups()) {
    EXPECT_FALSE(validate_sring(group_ring(G)).has_value());
    EXPECT_FALSE(validate_sring(rank2_sring(G)).has_value());
  }
}

TEST(SRing, CanonicalOrder) {
  auto A = SRing::from_partition(cyclic(6), {{3}, {1, 5}, {2, 4}, {0}});
  EXPECT_EQ(A.basic_set(0), (std::vector<elem_t>{0}));
  EXPECT_EQ(A.basic_set(1), (std::vector<elem_t>{3}));
  EXPECT_EQ(A.basic_set(2), (std::vector<elem_t>{1, 5}));
  EXPECT_EQ(A.basic_set(3), (std::vector<elem_t>{2, 4}));
  EXPECT_EQ(A.structure_constant(2, 2, 0), 2u);
  EXPECT_EQ(A.structure_constant(2, 2, 3), 1u);
}

TEST(SRing, FromAction) {
  for (const auto& G : small_groups()) {
    EXPECT_EQ(sring_from_action(regular_representation(G), G), group_ring(G));
    EXPECT_EQ(sring_from_action(PermGroup::symmetric(G.order()), G), rank2_sring(G));
    // G_right together with conjugations gives the class S-ring.
    std::vector<Perm> gens = regular_representation(G).generators();
    for (elem_t g : G.generators()) {
      std::vector<point_t> img(G.order());
      for (elem_t x = 0; x < G.order(); ++x) img[x] = G.conj(x, g);
      gens.emplace_back(img);
    }
    auto A = sring_from_action(PermGroup(G.order(), gens), G);
    auto classes = conjugacy_classes(G);
    EXPECT_EQ(A.rank(), classes.size());
    EXPECT_EQ(to_cayley_scheme(A), class_scheme(G));
  }
  EXPECT_THROW(sring_from_action(PermGroup::trivial(4), cyclic(4)), PreconditionError);
}

TEST(SRing, CayleyRoundTrip) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (const auto& G : small_groups()) {
    // Schurian S-rings from random overgroups of G_right: add a random
    // automorphism of G (it fixes e and normalizes G_right).
    auto auts = automorphisms(G);
    for (int t = 0; t < 5; ++t) {
      std::vector<Perm> gens = regular_representation(G).generators();
      const auto& f = auts[rng() % auts.size()];
      gens.emplace_back(std::vector<point_t>(f.begin(), f.end()));
      auto A = sring_from_action(PermGroup(G.order(), gens), G);
      auto X = to_cayley_scheme(A);
      EXPECT_EQ(X.rank(), A.rank());
      EXPECT_EQ(from_cayley_scheme(X, G), A);
      EXPECT_FALSE(validate_sring(A).has_value());
      ++checked;
    }
    EXPECT_EQ(to_cayley_scheme(group_ring(G)).rank(), G.order());
  }
  EXPECT_GE(checked, 50);
}

TEST(SRing, ConventionIsPinned) {
  // Over S3 the class of g must be read off as color(g, e).
  auto G = dihedral(6);
  // Fixed by conjugation with the reflection 3: not normal, so the left and
  // right readings differ.
  auto A = SRing::from_partition(G, {{0}, {1, 2}, {3}, {4, 5}});
  auto X = to_cayley_scheme(A);
  for (elem_t g = 0; g < 6; ++g)
    for (elem_t h = 0; h < 6; ++h)
      EXPECT_EQ(X.color(g, 0) == X.color(h, 0), A.class_of(g) == A.class_of(h));
  // The left-invariant coloring (g, h) -> class(h^-1 g) is a scheme too, but
  // not a Cayley scheme under the right convention.
  std::vector<color_t> raw(36);
  for (elem_t g = 0; g < 6; ++g)
    for (elem_t h = 0; h < 6; ++h) raw[g * 6 + h] = A.class_of(G.mul(G.inv(h), g));
  auto left = try_scheme(6, raw);
  ASSERT_TRUE(left.ok());
  EXPECT_THROW(from_cayley_scheme(*left.scheme, G), PreconditionError);
}

TEST(SRing, SchurianBasics) {
  for (const auto& G : small_groups()) {
    auto r = is_schurian(group_ring(G));
    EXPECT_TRUE(r.schurian);
    EXPECT_EQ(r.aut_order, G.order());
    EXPECT_TRUE(is_schurian(rank2_sring(G)).schurian);
  }
}

TEST(SRing, CertificateReplay) {
  std::mt19937_64 rng(5);
  for (const auto& G : small_groups()) {
    auto auts = automorphisms(G);
    std::vector<Perm> gens = regular_representation(G).generators();
    const auto& f = auts[rng() % auts.size()];
    gens.emplace_back(std::vector<point_t>(f.begin(), f.end()));
    auto A = sring_from_action(PermGroup(G.order(), gens), G);
    auto r = is_schurian(A);
    ASSERT_TRUE(r.schurian);
    EXPECT_EQ(sring_from_action(r.aut, G), A);
  }
}

TEST(SRing, SchurityStableUnderRelabeling) {
  std::mt19937_64 rng(99);
  for (std::uint32_t q : {7u, 11u, 19u}) {
    auto A = difference_set_sring(paley_difference_set(q));
    const std::size_t n = A.group().order();
    std::vector<elem_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin() + 1, sigma.end(), rng);
    std::vector<elem_t> tab(n * n);
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b)
        tab[sigma[a] * n + sigma[b]] = sigma[A.group().mul(a, b)];
    auto G2 = FiniteGroup::from_table(n, tab);
    ElementPartition P;
    for (const auto& X : A.classes()) {
      P.emplace_back();
      for (elem_t x : X) P.back().push_back(sigma[x]);
    }
    auto B = SRing::from_partition(G2, P);
    EXPECT_EQ(is_schurian(A).schurian, is_schurian(B).schurian) << q;
  }
}

TEST(SRing, DifferenceSetProducts) {
  for (auto S : {paley_difference_set(7), paley_difference_set(11), paley_difference_set(19),
                 singer_difference_set(2, 2), singer_difference_set(3, 2)}) {
    auto R = difference_set_sring(S);
    ASSERT_EQ(R.rank(), 4u);
    EXPECT_FALSE(validate_sring(R).has_value());
    auto c = difference_set_roles(R, S);
    const std::uint32_t n = S.n, k = S.k, l = S.lambda;
    EXPECT_EQ(R.basic_set(c.A).size(), n - 1);
    EXPECT_EQ(R.basic_set(c.X).size(), k);
    EXPECT_EQ(R.basic_set(c.Y).size(), n - k);
    EXPECT_EQ(R.structure_constant(c.A, c.A, c.e), n - 1);
    EXPECT_EQ(R.structure_constant(c.A, c.A, c.A), n - 2);
    EXPECT_EQ(R.structure_constant(c.A, c.X, c.X), k - 1);
    EXPECT_EQ(R.structure_constant(c.A, c.X, c.Y), k);
    EXPECT_EQ(R.structure_constant(c.A, c.Y, c.X), n - k);
    EXPECT_EQ(R.structure_constant(c.A, c.Y, c.Y), n - k - 1);
    // X Y = D (H \ D)^-1 = kH - D D^-1 = (k - lambda) A.
    EXPECT_EQ(R.structure_constant(c.X, c.Y, c.e), 0u);
    EXPECT_EQ(R.structure_constant(c.X, c.Y, c.A), k - l);
    EXPECT_EQ(R.structure_constant(c.X, c.X, c.e), k);
    EXPECT_EQ(R.structure_constant(c.X, c.X, c.A), l);
    auto X = to_cayley_scheme(R);
    EXPECT_EQ(X.rank(), 4u);
  }
}

TEST(SRing, PaleySchurity) {
  EXPECT_TRUE(is_schurian(difference_set_sring(paley_difference_set(7))).schurian);
  EXPECT_TRUE(is_schurian(difference_set_sring(paley_difference_set(11))).schurian);
  auto r = is_schurian(difference_set_sring(paley_difference_set(19)));
  EXPECT_FALSE(r.schurian);
  EXPECT_TRUE(r.split_class.has_value());
}

TEST(SRing, DesignCriterionCrossCheck) {
  // Schurity of the difference-set S-ring against the design's profile.
  std::vector<DifferenceSet> sets = {paley_difference_set(7), paley_difference_set(11),
                                     paley_difference_set(19), paley_difference_set(23),
                                     paley_difference_set(27), singer_difference_set(2, 2),
                                     singer_difference_set(2, 3), singer_difference_set(3, 2)};
  for (const auto& S : sets) {
    bool sch = is_schurian(difference_set_sring(S)).schurian;
    bool des = transitivity_profile(dev(S)).all();
    EXPECT_EQ(sch, des) << S.n << "," << S.k;
    auto C = complement(S);
    EXPECT_EQ(is_schurian(difference_set_sring(C)).schurian, transitivity_profile(dev(C)).all());
  }
}

TEST(SRing, Wreath) {
  // C2 inside C6 with the rank-2 scheme on the 3 cosets.
  auto G = cyclic(6);
  auto H = cyclic(2);
  GroupHom emb{H, G, {0, 3}};
  auto W = wreath_sring(group_ring(H), emb, rank2_scheme(3));
  EXPECT_EQ(W.rank(), 3u);
  EXPECT_EQ(W.basic_set(1), (std::vector<elem_t>{3}));
  EXPECT_EQ(W.basic_set(2), (std::vector<elem_t>{1, 2, 4, 5}));

  // Trivial top returns the bottom.
  auto D8 = dihedral(8);
  std::vector<elem_t> id(8);
  std::iota(id.begin(), id.end(), 0);
  auto A = rank2_sring(D8);
  EXPECT_EQ(wreath_sring(A, GroupHom{D8, D8, id}, rank2_scheme(1)), A);

  // Rank additivity over a nonabelian group: center of D8 below, regular on
  // the 4 cosets above.
  auto Z = D8.center();
  ASSERT_EQ(Z.size(), 2u);
  GroupHom z{cyclic(2), D8, {0, Z[1]}};
  std::size_t m = 0;
  auto idx = right_coset_index(D8, Z, &m);
  auto Q = quotient(D8, Z);
  std::vector<color_t> top(m * m);
  std::vector<elem_t> rep(m);
  for (elem_t g = 8; g-- > 0;) rep[idx[g]] = g;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) top[a * m + b] = idx[D8.mul(rep[a], D8.inv(rep[b]))];
  auto T = AssociationScheme::from_coloring(m, top);
  auto W2 = wreath_sring(group_ring(cyclic(2)), z, T);
  EXPECT_EQ(W2.rank(), 2 + T.rank() - 1);
  EXPECT_TRUE(is_refinement(to_cayley_scheme(group_ring(D8)), to_cayley_scheme(W2)));
}
