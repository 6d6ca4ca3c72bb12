#include <gtest/gtest.h>

#include <random>

#include "schur/scheme.hpp"

using namespace schur;

namespace {
PermGroup d10_on_5() {
  return PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{1, 4}, {2, 3}})});
}

PermGroup random_transitive(std::mt19937& rng, std::size_t n) {
  // a random generator plus an n-cycle guarantees transitivity
  std::vector<point_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  std::vector<Perm> gens{Perm(v)};
  std::vector<point_t> c(n);
  std::iota(c.begin(), c.end(), 0u);
  std::shuffle(c.begin(), c.end(), rng);
  gens.push_back(Perm::from_cycles(n, {c}));
  if (rng() % 2) gens.erase(gens.begin());
  return PermGroup(n, gens);
}
}  // namespace

TEST(Scheme, OrbitalSchemes) {
  EXPECT_EQ(orbital_scheme(PermGroup::symmetric(4)).rank(), 2u);
  EXPECT_EQ(orbital_scheme(regular_representation(cyclic(5))).rank(), 5u);
  auto X = orbital_scheme(d10_on_5());
  EXPECT_EQ(X.rank(), 3u);
  EXPECT_EQ(X.valencies(), (std::vector<std::size_t>{1, 2, 2}));
  PermGroup intrans(4, {Perm::from_cycles(4, {{0, 1}})});
  EXPECT_THROW(orbital_scheme(intrans), PreconditionError);
}

TEST(Scheme, CanonicalOrder) {
  // colors given in a scrambled order come back sorted by (valency, first cell)
  std::vector<color_t> raw{7, 3, 3, 3, 7, 3, 3, 3, 7};
  auto X = AssociationScheme::from_coloring(3, raw);
  EXPECT_EQ(X.color(0, 0), 0u);
  EXPECT_EQ(X.color(0, 1), 1u);
  auto Y = orbital_scheme(regular_representation(cyclic(4)));
  for (color_t c = 1; c < Y.rank(); ++c) EXPECT_EQ(Y.color(0, c), c);
}

TEST(Scheme, AxiomsOnRandomOrbitalSchemes) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 3 + rng() % 8;
    auto G = random_transitive(rng, n);
    auto X = orbital_scheme(G);
    EXPECT_FALSE(validate(X).has_value());
    EXPECT_EQ(X.rank(), rank_on_pairs(G));
    for (color_t i = 0; i < X.rank(); ++i) {
      EXPECT_EQ(X.p(i, X.transpose(i), 0), X.valency(i));
      for (color_t j = 0; j < X.rank(); ++j) {
        std::size_t s = 0;
        for (color_t k = 0; k < X.rank(); ++k) s += X.p(i, j, k) * X.valency(k);
        EXPECT_EQ(s, X.valency(i) * X.valency(j));
      }
    }
  }
}

TEST(Scheme, PerturbationIsCaught) {
  auto X = orbital_scheme(d10_on_5());
  std::vector<color_t> raw(X.colors().begin(), X.colors().end());
  raw[0 * 5 + 1] = raw[0 * 5 + 1] == 1 ? 2 : 1;
  EXPECT_TRUE(validate_coloring(5, raw).has_value());
  std::vector<color_t> diag{0, 1, 1, 1};
  EXPECT_TRUE(validate_coloring(2, std::vector<color_t>{0, 1, 1, 2}).has_value());
  EXPECT_THROW(AssociationScheme::from_coloring(2, std::vector<color_t>{0, 1, 1, 2}), NotAScheme);
  (void)diag;
  for (std::size_t n : {1u, 2u, 7u}) EXPECT_FALSE(validate(rank2_scheme(n)).has_value());
}

TEST(Scheme, Fusions) {
  auto X = orbital_scheme(regular_representation(cyclic(6)));
  ColorPartition singletons;
  for (color_t c = 1; c < X.rank(); ++c) singletons.push_back({c});
  auto v = fusion(X, singletons);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(*v.scheme, X);
  ColorPartition all(1);
  for (color_t c = 1; c < X.rank(); ++c) all[0].push_back(c);
  EXPECT_EQ(fusion(X, all).scheme->rank(), 2u);
  // colors of the regular C6 scheme: color c <-> element c, transpose c <-> -c
  // transposed blocks may differ, but must be blocks
  ColorPartition split_pair{{1, 5}, {2}, {3}, {4}};
  EXPECT_FALSE(fusion(X, split_pair).ok());  // {1,5}.{2} hits 1 and 3
  ColorPartition bad{{1, 2}, {3, 4}, {5}};
  EXPECT_THROW(fusion(X, bad), PreconditionError);
  ColorPartition notscheme{{1, 5, 3}, {2, 4}};
  ColorPartition good{{1, 5, 2, 4}, {3}};
  EXPECT_TRUE(fusion(X, good).ok());
  // {1,5,3} = non-generators... check against the numeric test either way
  EXPECT_EQ(fusion(X, notscheme).ok(), fusion_is_scheme_by_numbers(X, notscheme));
  ColorPartition nope{{1, 5, 2}, {4}, {3}};
  EXPECT_THROW(fusion(X, nope), PreconditionError);
  ColorPartition missing{{1, 5}, {2, 4}};
  EXPECT_THROW(fusion(X, missing), PreconditionError);
}

TEST(Scheme, FusionMonotonicity) {
  // On small schemes every transpose-closed partition: the numeric test agrees
  // with the full check.
  for (auto X : {orbital_scheme(regular_representation(cyclic(6))),
                 orbital_scheme(regular_representation(elementary_abelian(2, 3))),
                 orbital_scheme(regular_representation(dihedral(8)))}) {
    const std::size_t m = X.rank() - 1;
    std::vector<std::size_t> a(m, 0);
    std::size_t tested = 0;
    auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
      if (i == m) {
        ColorPartition pi(blocks);
        for (std::size_t t = 0; t < m; ++t) pi[a[t]].push_back(static_cast<color_t>(t + 1));
        try {
          bool full = fusion(X, pi).ok();
          EXPECT_EQ(full, fusion_is_scheme_by_numbers(X, pi));
          ++tested;
        } catch (const PreconditionError&) {
        }
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        a[i] = b;
        self(self, i + 1, std::max(blocks, b + 1));
      }
    };
    rec(rec, 0, 0);
    EXPECT_GT(tested, 0u);
  }
}

TEST(Scheme, Discriminators) {
  auto X = orbital_scheme(d10_on_5());
  EXPECT_TRUE(is_simple_connected_graph(X, 1));
  auto labs = select_colors_by_valency(X, {2, 2});
  EXPECT_EQ(labs.size(), 2u);
  // wreath of K2-scheme over rank-2 on 3: within-block color is a union of 3 K2
  auto W = wreath(rank2_scheme(2), rank2_scheme(3));
  color_t inner = W.color(0, 1);
  EXPECT_EQ(clique_union_count(W, inner), 3u);
  EXPECT_FALSE(is_connected(W, inner));
  auto l = select_colors_by_valency(W, {1, 4}, {LabelConstraint::clique_union(1)});
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0][1], inner);
  EXPECT_TRUE(select_colors_by_valency(W, {1, 3}).empty());
  // no ties: identity labeling
  auto Y = orbital_scheme(PermGroup(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}),
                                        Perm::from_cycles(6, {{1, 5}, {2, 4}})}));
  std::vector<std::size_t> pattern;
  for (color_t c = 1; c < Y.rank(); ++c) pattern.push_back(Y.valency(c));
  auto ys = select_colors_by_valency(Y, pattern);
  EXPECT_GE(ys.size(), 1u);
}

TEST(Scheme, Wreath) {
  EXPECT_EQ(wreath(rank2_scheme(2), rank2_scheme(3)).rank(), 3u);
  auto X = orbital_scheme(d10_on_5());
  auto W1 = wreath(X, rank2_scheme(1));
  EXPECT_EQ(W1, X);
  for (auto [A, B] : std::vector<std::pair<AssociationScheme, AssociationScheme>>{
           {X, rank2_scheme(3)}, {rank2_scheme(4), X}, {X, X}}) {
    auto W = wreath(A, B);
    EXPECT_EQ(W.rank(), A.rank() + B.rank() - 1);
    EXPECT_EQ(W.size(), A.size() * B.size());
  }
}

TEST(Scheme, ClassScheme) {
  EXPECT_EQ(class_scheme(cyclic(6)).rank(), 6u);
  EXPECT_EQ(class_scheme(dihedral(6)).rank(), 3u);
  auto P = class_scheme(psl2(7));
  EXPECT_EQ(P.rank(), 6u);
  EXPECT_EQ(P.valencies(), (std::vector<std::size_t>{1, 21, 24, 24, 42, 56}));
}

TEST(Scheme, Rank4SizeRespecting) {
  EXPECT_TRUE(rank4_size_respecting_fusions(dihedral(6)).empty());
  // every nonidentity class of C4 has size 1, so they form a single cell
  EXPECT_TRUE(rank4_size_respecting_fusions(cyclic(4)).empty());
  auto a = rank4_size_respecting_fusions(psl2(7));
  auto b = rank4_size_respecting_fusions(psl2(7));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].scheme.rank(), 4u);
    EXPECT_EQ(a[i].scheme, b[i].scheme);
    EXPECT_FALSE(a[i].equals_class_scheme);
  }
  // A4: classes 1,3,4,4 -> cells {3},{4,4}: rank 3, nothing of rank 4
  EXPECT_TRUE(rank4_size_respecting_fusions(alternating_group(4)).empty());
  // D10: classes 1,2,2,5 -> cells {2,2},{5}: only rank 3
  EXPECT_TRUE(rank4_size_respecting_fusions(dihedral(10)).empty());
}
