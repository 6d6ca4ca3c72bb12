#include <gtest/gtest.h>

#include "schur/gf.hpp"

using namespace schur;

TEST(GaloisField, PrimePower) {
  EXPECT_EQ(prime_power(8), (std::pair<std::uint32_t, std::uint32_t>{2, 3}));
  EXPECT_EQ(prime_power(13), (std::pair<std::uint32_t, std::uint32_t>{13, 1}));
  EXPECT_FALSE(prime_power(12).has_value());
  EXPECT_FALSE(prime_power(1).has_value());
  EXPECT_THROW(GaloisField(6), PreconditionError);
}

TEST(GaloisField, FieldAxiomsSmallOrders) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u}) {
    GaloisField F(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, 0), a);
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      EXPECT_EQ(F.mul(a, 1), a);
      if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        for (std::uint32_t c = 0; c < q; c += 3) {
          EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))) << q;
        }
      }
    }
  }
}

TEST(GaloisField, PrimitiveElement) {
  EXPECT_EQ(GaloisField(7).primitive(), 3u);
  EXPECT_EQ(GaloisField(11).primitive(), 2u);
  EXPECT_EQ(GaloisField(2).primitive(), 1u);
  GaloisField F(8);
  std::set<std::uint32_t> seen;
  for (int k = 0; k < 7; ++k) seen.insert(F.exp(k));
  EXPECT_EQ(seen.size(), 7u);
  // x^3 + x + 1 is the least primitive cubic over GF(2)
  EXPECT_EQ(F.modulus(), (std::vector<std::uint32_t>{1, 1, 0}));
}

TEST(GaloisField, Squares) {
  GaloisField F(7);
  std::vector<std::uint32_t> sq;
  for (std::uint32_t a = 1; a < 7; ++a)
    if (F.is_square(a)) sq.push_back(a);
  EXPECT_EQ(sq, (std::vector<std::uint32_t>{1, 2, 4}));
}
