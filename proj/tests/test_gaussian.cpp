#include <gtest/gtest.h>

#include <random>

#include "congruent/gaussian.hpp"

using namespace congruent;

namespace {

// Every class of Z[i]/(pi) contains a rational integer, so (x/pi) is decided
// by trying y = 0..p-1 with pi | y^2 - x.
int brute_symbol(const GaussianInt& x, const GaussianInt& pi) {
  Int p = pi.norm();
  if (gi_divides(pi, x)) return 0;
  for (Int y = 1; y < p; ++y) {
    if (gi_divides(pi, GaussianInt(y * y) - x)) return 1;
  }
  return -1;
}

}  // namespace

TEST(Gaussian, Arithmetic) {
  GaussianInt a(3L, 4L), b(1L, -2L);
  EXPECT_EQ(a * b, GaussianInt(11L, -2L));
  EXPECT_EQ(a.norm(), 25);
  EXPECT_EQ(a.conj(), GaussianInt(3L, -4L));
  EXPECT_EQ(i_power(3), GaussianInt(0L, -1L));
  EXPECT_EQ(i_power(-1), i_power(3));
}

TEST(Gaussian, GcdAndDivision) {
  GaussianInt q;
  EXPECT_TRUE(gi_divides(GaussianInt(1L, 1L), GaussianInt(2L), &q));
  EXPECT_EQ(q, GaussianInt(1L, -1L));
  EXPECT_FALSE(gi_divides(GaussianInt(2L, 1L), GaussianInt(3L)));
  GaussianInt g = gi_gcd(GaussianInt(5L, 4L) * GaussianInt(2L, 1L), GaussianInt(5L, 4L) * GaussianInt(3L));
  EXPECT_EQ(g.norm(), 41);
  EXPECT_THROW(gi_gcd(GaussianInt(0L), GaussianInt(0L)), Error);
}

TEST(TwoSquares, Examples) {
  auto t = two_squares(OddPrime(41UL));
  EXPECT_EQ(t.u, 5);
  EXPECT_EQ(t.v, 4);
  t = two_squares(OddPrime(17UL));
  EXPECT_EQ(t.u, 1);
  EXPECT_EQ(t.v, 4);
  EXPECT_THROW(two_squares(OddPrime(7UL)), Error);
}

TEST(TwoSquares, SumsBack) {
  for (unsigned long q = 5; q < 20000; q += 4) {
    if (!is_probable_prime(Int(q))) continue;
    auto t = two_squares(OddPrime(q));
    ASSERT_EQ(t.u * t.u + t.v * t.v, q);
    EXPECT_TRUE(mpz_odd_p(t.u.get_mpz_t()));
  }
}

TEST(PrimaryAssociate, Normalization) {
  auto x = primary_associate(GaussianInt(4L, 5L));
  EXPECT_EQ(x.norm(), 41);
  EXPECT_EQ(mod(x.re + x.im, 4), 1);
  EXPECT_TRUE(mpz_even_p(x.im.get_mpz_t()));
  EXPECT_THROW(primary_associate(GaussianInt(1L, 1L)), Error);
}

TEST(GiSymbol, Examples) {
  EXPECT_EQ(gi_symbol(GaussianInt(1L, 1L), GaussianInt(5L, 4L)), 1);
  // (i/pi) = -1 for p ≡ 5 mod 8, +1 for p ≡ 1 mod 8
  EXPECT_EQ(gi_symbol(GaussianInt::unit_i(), GaussianInt(2L, 1L)), -1);
  EXPECT_EQ(gi_symbol(GaussianInt::unit_i(), GaussianInt(1L, 4L)), 1);
  EXPECT_THROW(gi_symbol(GaussianInt(1L), GaussianInt(3L)), Error);
}

TEST(GiSymbol, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> comp(-30, 30);
  std::size_t checked = 0;
  while (checked < 300) {
    GaussianInt pi(comp(rng), comp(rng));
    Int n = pi.norm();
    if (n <= 2 || n > 2000 || !is_probable_prime(n)) continue;
    GaussianInt x(comp(rng), comp(rng));
    ASSERT_EQ(gi_symbol(x, pi), brute_symbol(x, pi)) << x << " mod " << pi;
    ++checked;
  }
}

TEST(GaussianResidueMap, IsARingHomomorphism) {
  GaussianResidueMap map(GaussianInt(5L, 4L));
  EXPECT_EQ(map.i_image, 9);
  GaussianInt a(7L, -3L), b(-2L, 11L);
  EXPECT_EQ(map(a * b), mod(map(a) * map(b), 41));
  EXPECT_EQ(map(a + b), mod(map(a) + map(b), 41));
  EXPECT_EQ(map(GaussianInt(5L, 4L)), 0);
}
