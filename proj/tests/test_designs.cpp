#include <gtest/gtest.h>

#include "schur/designs.hpp"

using namespace schur;

TEST(DifferenceSet, SmallExamples) {
  auto v = is_difference_set(cyclic(7), {1, 2, 4});
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.set->n, 7u);
  EXPECT_EQ(v.set->k, 3u);
  EXPECT_EQ(v.set->lambda, 1u);

  auto w = is_difference_set(cyclic(5), {1, 2, 3, 4});
  ASSERT_TRUE(w.ok());
  EXPECT_EQ(w.set->lambda, 3u);

  EXPECT_FALSE(is_difference_set(cyclic(5), {0, 1}).ok());
  EXPECT_THROW(is_difference_set(dihedral(6), {1}), PreconditionError);
}

TEST(DifferenceSet, Paley) {
  auto p7 = paley_difference_set(7);
  EXPECT_EQ(p7.D, (std::vector<elem_t>{1, 2, 4}));
  auto p11 = paley_difference_set(11);
  EXPECT_EQ(p11.D, (std::vector<elem_t>{1, 3, 4, 5, 9}));
  EXPECT_EQ(p11.lambda, 2u);
  auto p19 = paley_difference_set(19);
  EXPECT_EQ(p19.k, 9u);
  EXPECT_EQ(p19.lambda, 4u);
  auto p27 = paley_difference_set(27);
  EXPECT_EQ(p27.k, 13u);
  EXPECT_EQ(p27.lambda, 6u);
  EXPECT_THROW(paley_difference_set(13), PreconditionError);
  EXPECT_THROW(paley_difference_set(15), PreconditionError);
}

TEST(DifferenceSet, SingerParameters) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    for (std::uint32_t d = 2;; ++d) {
      std::uint64_t qd = 1;
      for (std::uint32_t i = 0; i <= d; ++i) qd *= q;
      std::size_t n = (qd - 1) / (q - 1);
      if (n > kSingerCap) break;
      auto S = singer_difference_set(q, d);
      EXPECT_EQ(S.n, n);
      EXPECT_EQ(S.k, (qd / q - 1) / (q - 1));
      EXPECT_EQ(S.lambda, (qd / q / q - 1) / (q - 1));
      EXPECT_EQ(S.k * (S.k - 1), S.lambda * (S.n - 1));
    }
  }
  auto s22 = singer_difference_set(2, 2);
  EXPECT_EQ(s22.n, 7u);
  auto s32 = singer_difference_set(3, 2);
  EXPECT_EQ(s32.n, 13u);
  EXPECT_EQ(s32.k, 4u);
  EXPECT_THROW(singer_difference_set(2, 1), PreconditionError);
  EXPECT_THROW(singer_difference_set(6, 2), PreconditionError);
}

TEST(Design, DevParameters) {
  auto B = dev(paley_difference_set(7));
  EXPECT_EQ(B.flags().size(), 21u);
  EXPECT_EQ(B.antiflags().size(), 28u);
  auto C = dev(singer_difference_set(2, 3));
  EXPECT_EQ(C.n, 15u);
  EXPECT_EQ(C.flags().size(), 15u * 7u);
}

TEST(Design, FanoProfile) {
  auto prof = transitivity_profile(dev(paley_difference_set(7)));
  EXPECT_EQ(prof.aut_order, 168);
  EXPECT_TRUE(prof.two_transitive);
  EXPECT_TRUE(prof.flag_transitive);
  EXPECT_TRUE(prof.antiflag_transitive);
}

TEST(Design, PaleyNineteenFails) {
  auto prof = transitivity_profile(dev(paley_difference_set(19)));
  EXPECT_FALSE(prof.all());
  EXPECT_FALSE(prof.two_transitive);
}

TEST(Design, ComplementSwapsFlagRoles) {
  for (auto S : {paley_difference_set(7), paley_difference_set(11), singer_difference_set(2, 3),
                 paley_difference_set(19)}) {
    auto a = transitivity_profile(dev(S));
    auto b = transitivity_profile(dev(complement(S)));
    EXPECT_EQ(a.flag_orbits, b.antiflag_orbits);
    EXPECT_EQ(a.antiflag_orbits, b.flag_orbits);
    EXPECT_EQ(a.two_transitive, b.two_transitive);
    EXPECT_EQ(a.aut_order, b.aut_order);
  }
}

TEST(Design, RegularGroupHasManyFlagOrbits) {
  auto S = paley_difference_set(7);
  auto B = dev(S);
  // Translations x -> x + a on points and blocks simultaneously.
  std::vector<Perm> gens;
  std::vector<point_t> img(14);
  for (point_t x = 0; x < 7; ++x) {
    img[x] = (x + 1) % 7;
    img[7 + x] = 7 + (x + 6) % 7;
  }
  gens.emplace_back(img);
  PermGroup T(14, gens);
  std::vector<std::pair<point_t, point_t>> fl;
  for (auto [x, b] : B.flags()) fl.emplace_back(x, b + 7);
  EXPECT_EQ(flag_orbit_count(T, fl), 3u);
}
