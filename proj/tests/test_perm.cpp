#include <gtest/gtest.h>

#include <random>

#include "schur/group.hpp"
#include "schur/perm.hpp"

using namespace schur;

TEST(Perm, ComposeIsLeftToRight) {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  Perm c = a * b;
  EXPECT_EQ(c[0], 2u);  // 0 -a-> 1 -b-> 2
  EXPECT_EQ(c[2], 1u);
  EXPECT_EQ(c[1], 0u);
  EXPECT_EQ(c.order(), 3u);
}

TEST(Perm, IdentityAndInverse) {
  Perm p = Perm::from_cycles(5, {{0, 3, 4}, {1, 2}});
  EXPECT_EQ(Perm(5) * p, p);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.pow(6), Perm(5));
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.to_string(), "(1,4,5)(2,3)");
}

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Perm(std::vector<point_t>{0, 0, 1}), PreconditionError);
  EXPECT_THROW(Perm(3) * Perm(4), PreconditionError);
}

TEST(Perm, ComposeAssociative) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<point_t> v(9);
    std::iota(v.begin(), v.end(), 0u);
    auto rnd = [&] {
      std::shuffle(v.begin(), v.end(), rng);
      return Perm(v);
    };
    Perm a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(PermGroup, Orders) {
  EXPECT_EQ(PermGroup(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})})
                .order(),
            24);
  EXPECT_EQ(PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})}).order(), 5);
  EXPECT_EQ(regular_representation(dihedral(8)).order(), 8);
  EXPECT_EQ(PermGroup::symmetric(10).order(), 3628800);
  EXPECT_EQ(PermGroup::trivial(3).order(), 1);
}

TEST(PermGroup, MembershipConsistency) {
  // A5 inside S5
  PermGroup A(5, {Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  EXPECT_EQ(A.order(), 60);
  std::mt19937 rng(1);
  for (int t = 0; t < 100; ++t) {
    Perm w(5);
    for (int k = 0; k < 10; ++k) w = w * A.generators()[rng() % 2];
    EXPECT_TRUE(A.contains(w));
  }
  EXPECT_FALSE(A.contains(Perm::from_cycles(5, {{0, 1}})));
}

TEST(PermGroup, OrbitsAndStabilizers) {
  PermGroup G(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}})});
  auto o = G.orbits();
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0], (std::vector<point_t>{0, 1}));
  EXPECT_EQ(o[1], (std::vector<point_t>{2, 3}));

  EXPECT_EQ(point_stabilizer(PermGroup::symmetric(3), 0).order(), 2);
  EXPECT_EQ(point_stabilizer(regular_representation(cyclic(6)), 0).order(), 1);
  PermGroup A4(4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})});
  EXPECT_EQ(A4.order(), 12);
  EXPECT_EQ(point_stabilizer(A4, 0).order(), 3);
}

TEST(PermGroup, OrbitStabilizerProperty) {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 4 + rng() % 6;
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<point_t> v(n);
      std::iota(v.begin(), v.end(), 0u);
      std::shuffle(v.begin(), v.end(), rng);
      gens.emplace_back(v);
    }
    PermGroup G(n, gens);
    for (point_t x = 0; x < n; ++x) {
      EXPECT_EQ(G.order(), G.stabilizer(x).order() * G.orbit(x).size());
    }
  }
}

TEST(PermGroup, StabilizerInD10OnItself) {
  // D10 acting on itself by right multiplication and by conjugation.
  auto G = dihedral(10);
  std::vector<Perm> gens;
  for (elem_t g : G.generators()) {
    gens.push_back(multiplication_perm(G, g, Side::right));
    std::vector<point_t> img(G.order());
    for (elem_t x = 0; x < G.order(); ++x) img[x] = G.conj(x, g);
    gens.emplace_back(img);
  }
  PermGroup Gamma(G.order(), gens);
  auto orb = orbits(point_stabilizer(Gamma, 0), std::vector<point_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  std::multiset<std::size_t> sizes;
  for (auto& o : orb) sizes.insert(o.size());
  auto cls = conjugacy_classes(G);
  std::multiset<std::size_t> csizes;
  for (auto& c : cls) csizes.insert(c.size());
  EXPECT_EQ(sizes, csizes);
}

TEST(PermGroup, RankOnPairs) {
  EXPECT_EQ(rank_on_pairs(PermGroup::symmetric(6)), 2u);
  EXPECT_EQ(rank_on_pairs(regular_representation(cyclic(5))), 5u);
  PermGroup D10(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{1, 4}, {2, 3}})});
  EXPECT_EQ(rank_on_pairs(D10), 3u);
  EXPECT_TRUE(D10.is_transitive());
  EXPECT_FALSE(D10.is_regular());
  EXPECT_TRUE(regular_representation(cyclic(7)).is_regular());
}

TEST(PermGroup, LeftAndRightRegularCommute) {
  auto G = dihedral(8);
  for (elem_t a = 0; a < 8; ++a)
    for (elem_t b = 0; b < 8; ++b) {
      Perm r = multiplication_perm(G, a, Side::right);
      Perm l = multiplication_perm(G, b, Side::left);
      EXPECT_EQ(r * l, l * r);
    }
  EXPECT_EQ(regular_representation(cyclic(3)).order(), 3);
  EXPECT_TRUE(regular_representation(dihedral(8), Side::left).is_regular());
}

TEST(PermGroup, CosetAction) {
  auto G = cyclic(6);
  std::vector<elem_t> e{0};
  EXPECT_TRUE(coset_action(G, e).is_regular());
  std::vector<elem_t> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(coset_action(G, all).degree(), 1u);
  auto A5 = alternating_group(5);
  EXPECT_EQ(A5.order(), 60u);
  // an involution of cycle type (1,2)(3,4)
  std::vector<Perm> elems;
  from_permutations(5, {Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})},
                    {}, &elems);
  Perm inv = Perm::from_cycles(5, {{0, 1}, {2, 3}});
  // locate it in A5's own ordering
  std::vector<Perm> a5elems;
  auto A = from_permutations(5, {Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{1, 2, 3}}),
                                 Perm::from_cycles(5, {{2, 3, 4}})},
                             {}, &a5elems);
  elem_t idx = static_cast<elem_t>(std::find(a5elems.begin(), a5elems.end(), inv) - a5elems.begin());
  ASSERT_LT(idx, A.order());
  std::vector<elem_t> H{0, idx};
  auto act = coset_action(A, H);
  EXPECT_EQ(act.degree(), 30u);
  EXPECT_TRUE(act.is_transitive());
  EXPECT_EQ(act.order(), 60);
  std::vector<elem_t> bad{0, 1};
  EXPECT_THROW(coset_action(cyclic(5), bad), PreconditionError);
}

TEST(WreathProduct, OrderAndBlocks) {
  PermGroup C2(2, {Perm::from_cycles(2, {{0, 1}})});
  PermGroup W = wreath_product(C2, PermGroup::symmetric(3));
  EXPECT_EQ(W.degree(), 6u);
  EXPECT_EQ(W.order(), BigInt(48));
  EXPECT_TRUE(W.is_transitive());
  // blocks {0,1},{2,3},{4,5} are preserved
  for (const Perm& g : W.generators())
    for (point_t x = 0; x < 6; x += 2) EXPECT_EQ(g[x] / 2, g[x + 1] / 2);
}
