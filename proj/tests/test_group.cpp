#include <gtest/gtest.h>

#include <set>

#include "schur/group.hpp"

using namespace schur;

namespace {
std::multiset<std::size_t> class_sizes(const FiniteGroup& G) {
  std::multiset<std::size_t> s;
  for (auto& c : conjugacy_classes(G)) s.insert(c.size());
  return s;
}
std::size_t involutions(const FiniteGroup& G) {
  auto st = G.order_statistics();
  return st.count(2) ? st.at(2) : 0;
}
}  // namespace

TEST(Groups, BasicConstructors) {
  EXPECT_EQ(cyclic(12).order(), 12u);
  EXPECT_EQ(elementary_abelian(3, 2).order(), 9u);
  EXPECT_EQ(elementary_abelian(3, 2).exponent(), 3u);
  EXPECT_EQ(dihedral(38).order(), 38u);
  EXPECT_TRUE(is_isomorphic(generalized_dihedral(cyclic(7)), dihedral(14)).has_value());
  auto G = generalized_dihedral(elementary_abelian(3, 2));
  EXPECT_EQ(G.order(), 18u);
  EXPECT_EQ(G.exponent(), 6u);
  EXPECT_THROW(generalized_dihedral(dihedral(6)), PreconditionError);
}

TEST(Groups, GeneralizedDihedralOrderingAndInversion) {
  auto H = elementary_abelian(2, 2);
  auto G = generalized_dihedral(cyclic(5));
  elem_t g = 5;
  for (elem_t h = 0; h < 5; ++h) {
    EXPECT_EQ(G.conj(h, g), G.inv(h));
    EXPECT_EQ(G.mul(h, 0), h);
  }
  EXPECT_EQ(G.element_order(g), 2u);
  (void)H;
}

TEST(Groups, DihedralCenter) {
  for (std::size_t n = 3; n <= 10; ++n) {
    EXPECT_EQ(dihedral(2 * n).center().size(), n % 2 ? 1u : 2u) << n;
  }
}

TEST(Groups, PresentedFamilies) {
  auto G = g16();
  EXPECT_EQ(G.order(), 16u);
  EXPECT_EQ(G.exponent(), 4u);
  EXPECT_FALSE(G.is_abelian());
  // a^i b^j c^l at index i + 4j + 8l; [b,c] = a^2 and <a> is central.
  elem_t a = 1, b = 4, c = 8;
  EXPECT_EQ(G.mul(G.mul(G.inv(b), G.inv(c)), G.mul(b, c)), 2u);
  EXPECT_EQ(G.mul(a, b), G.mul(b, a));
  EXPECT_EQ(G.mul(a, c), G.mul(c, a));
  EXPECT_EQ(G.center().size(), 4u);

  auto M = modular_M(3, 3);
  EXPECT_EQ(M.order(), 27u);
  EXPECT_EQ(M.exponent(), 9u);
  EXPECT_FALSE(M.is_abelian());
  EXPECT_EQ(involutions(quaternion_generalized(8)), 1u);
  EXPECT_EQ(involutions(quaternion_generalized(16)), 1u);
  auto SD = semidihedral(16);
  EXPECT_EQ(SD.order(), 16u);
  elem_t sa = 1, sb = 8;
  EXPECT_EQ(SD.conj(sa, sb), SD.pow(sa, 3));
  EXPECT_THROW(semidihedral(8), PreconditionError);
  EXPECT_THROW(modular_M(2, 3), PreconditionError);
  EXPECT_THROW(quaternion_generalized(4), PreconditionError);
}

TEST(Groups, Products) {
  auto s3 = semidirect_cyclic(cyclic(3), 2, {0, 2, 1});
  EXPECT_TRUE(is_isomorphic(s3, dihedral(6)).has_value());
  auto P = direct_product(elementary_abelian(3, 2), cyclic(2));
  EXPECT_EQ(P.order(), 18u);
  EXPECT_TRUE(P.is_abelian());
  auto F20 = semidirect_cyclic(cyclic(5), 4, {0, 2, 4, 1, 3});
  EXPECT_EQ(F20.order(), 20u);
  EXPECT_EQ(F20.center().size(), 1u);
  EXPECT_THROW(semidirect_cyclic(cyclic(5), 4, {0, 2, 3, 4, 1}), PreconditionError);
}

TEST(Groups, FrobeniusField) {
  auto G = frobenius_field(2, 3, 7);
  EXPECT_EQ(G.order(), 56u);
  EXPECT_EQ(involutions(G), 7u);
  std::vector<elem_t> N;
  for (elem_t v = 0; v < 8; ++v) N.push_back(v);
  EXPECT_TRUE(G.is_normal(N));
  EXPECT_EQ(frobenius_field(2, 4, 3).order(), 48u);
  auto B = frobenius_field(2, 5, 31);
  EXPECT_EQ(B.order(), 992u);
  elem_t gen = 32;  // (0, 1)
  EXPECT_EQ(B.element_order(gen), 31u);
  for (elem_t v = 1; v < 32; ++v) EXPECT_NE(B.conj(v, gen), v);
  EXPECT_THROW(frobenius_field(2, 3, 5), PreconditionError);
}

TEST(Groups, PSL2) {
  EXPECT_TRUE(is_isomorphic(psl2(2), dihedral(6)).has_value());
  EXPECT_TRUE(is_isomorphic(psl2(3), alternating_group(4)).has_value());
  auto G = psl2(7);
  EXPECT_EQ(G.order(), 168u);
  EXPECT_EQ(class_sizes(G), (std::multiset<std::size_t>{1, 21, 24, 24, 42, 56}));
  EXPECT_EQ(psl2(4).order(), 60u);
  EXPECT_EQ(psl2(9).order(), 360u);
  EXPECT_THROW(psl2(6), PreconditionError);
}

TEST(Groups, ConjugacyClasses) {
  EXPECT_EQ(class_sizes(dihedral(6)), (std::multiset<std::size_t>{1, 2, 3}));
  EXPECT_EQ(conjugacy_classes(cyclic(6)).size(), 6u);
  for (auto G : {dihedral(12), quaternion_generalized(16), alternating_group(4), g16()}) {
    std::size_t total = 0;
    auto cls = conjugacy_classes(G);
    EXPECT_EQ(cls[0], std::vector<elem_t>{0});
    for (auto& c : cls) {
      total += c.size();
      EXPECT_EQ(G.order() % c.size(), 0u);
    }
    EXPECT_EQ(total, G.order());
  }
}

TEST(Groups, QuotientAndIsomorphism) {
  auto D8 = dihedral(8);
  auto Z = D8.center();
  auto Q = quotient(D8, Z);
  EXPECT_TRUE(is_isomorphic(Q, elementary_abelian(2, 2)).has_value());
  EXPECT_FALSE(is_isomorphic(cyclic(4), elementary_abelian(2, 2)).has_value());
  auto w = is_isomorphic(generalized_dihedral(cyclic(3)), psl2(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->is_homomorphism());
  EXPECT_TRUE(w->is_injective());
  std::vector<elem_t> notnormal{0, 4};  // reflection in D8
  EXPECT_THROW(quotient(D8, notnormal), PreconditionError);
}

TEST(Groups, IsomorphismReflexiveSymmetric) {
  std::vector<FiniteGroup> gs{cyclic(8),        dihedral(8),           quaternion_generalized(8),
                              direct_product(cyclic(4), cyclic(2)), g16(),
                              modular_M(2, 4), semidihedral(16),     catalogue(16, 3),
                              catalogue(16, 4), direct_product(cyclic(2), dihedral(8)),
                              catalogue(16, 12), quaternion_generalized(32)};
  for (std::size_t i = 0; i < gs.size(); ++i) {
    EXPECT_TRUE(is_isomorphic(gs[i], gs[i]).has_value()) << i;
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      bool ab = is_isomorphic(gs[i], gs[j]).has_value();
      bool ba = is_isomorphic(gs[j], gs[i]).has_value();
      EXPECT_EQ(ab, ba);
      if (gs[i].order() == gs[j].order() && i != 9 && j != 9) EXPECT_FALSE(ab) << i << " " << j;
    }
  }
}

TEST(Groups, Automorphisms) {
  EXPECT_EQ(automorphisms(cyclic(8)).size(), 4u);
  EXPECT_EQ(automorphisms(elementary_abelian(2, 3)).size(), 168u);
  EXPECT_EQ(automorphisms(dihedral(8)).size(), 8u);
  EXPECT_EQ(automorphisms(quaternion_generalized(8)).size(), 24u);
  EXPECT_EQ(automorphisms(dihedral(6)).size(), 6u);
  auto a = automorphisms(cyclic(5));
  for (elem_t i = 0; i < 5; ++i) EXPECT_EQ(a[0][i], i);
}

TEST(Groups, SubgroupGenerated) {
  auto G = dihedral(12);
  std::vector<elem_t> s{2};
  EXPECT_EQ(subgroup_generated(G, s), (std::vector<elem_t>{0, 2, 4}));
  EXPECT_TRUE(G.is_subgroup(subgroup_generated(G, std::vector<elem_t>{1, 6})));
}

TEST(Groups, TableValidation) {
  EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1, 1}), PreconditionError);
  EXPECT_THROW(FiniteGroup::from_table(2, {1, 0, 0, 1}), PreconditionError);
  // Latin square with identity that is not associative (order 5 loop)
  std::vector<elem_t> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                           3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup::from_table(5, loop), PreconditionError);
}

TEST(Groups, Catalogue) {
  for (auto [n, id] : std::vector<std::pair<int, int>>{{16, 3}, {16, 4}, {16, 6}, {16, 8}, {16, 9},
                                                       {16, 11}, {16, 12}, {16, 13}, {18, 3}, {18, 4},
                                                       {24, 1}, {24, 5}, {24, 7}, {24, 10}, {24, 11},
                                                       {24, 12}, {24, 13}, {24, 14}, {27, 3}, {27, 4}}) {
    auto G = catalogue(n, id);
    EXPECT_EQ(G.order(), static_cast<std::size_t>(n));
  }
  EXPECT_EQ(catalogue(27, 3).exponent(), 3u);
  EXPECT_EQ(catalogue(16, 3).center().size(), 4u);
  EXPECT_EQ(catalogue(16, 4).exponent(), 4u);
  EXPECT_THROW(catalogue(16, 99), PreconditionError);
}
