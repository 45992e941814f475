#include <gtest/gtest.h>

#include "congruent/criteria.hpp"
#include "congruent/els.hpp"

using namespace congruent;

namespace {

// Root of q mod p by trying every residue.
bool has_root_brute(const QuarticCover& cover) {
  const long p = cover.p.value().get_si();
  for (long x = 0; x < p; ++x) {
    long acc = 0;
    for (int k = 4; k >= 0; --k) acc = ((acc * x + cover.q_coeffs[k]) % p + p) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

TEST(Els, Examples) {
  EXPECT_FALSE(locally_solvable_at_p(make_cover(CoverLabel::D2, OddPrime(17UL))));
  EXPECT_FALSE(locally_solvable_at_p(make_cover(CoverLabel::D1, OddPrime(17UL))));
  EXPECT_TRUE(locally_solvable_at_p(make_cover(CoverLabel::D1, OddPrime(41UL))));
  EXPECT_TRUE(locally_solvable_at_p(make_cover(CoverLabel::D2, OddPrime(41UL))));
}

TEST(Els, Preconditions) {
  EXPECT_THROW(locally_solvable_at_p(make_cover(CoverLabel::C1, OddPrime(41UL))), Error);
  EXPECT_THROW(locally_solvable_at_p(make_cover(CoverLabel::D1, OddPrime(13UL))), Error);
  EXPECT_THROW(lemma_symbol_prediction(make_cover(CoverLabel::C3, OddPrime(41UL))), Error);
}

TEST(Els, GcdTestMatchesBruteForceRoots) {
  for (unsigned long q = 17; q < 20000; q += 8) {
    if (!is_probable_prime(Int(q))) continue;
    OddPrime p(q);
    for (auto label : {CoverLabel::D1, CoverLabel::D2}) {
      auto cover = make_cover(label, p);
      bool root = has_root_brute(cover);
      ASSERT_EQ(locally_solvable_at_p(cover), root) << to_string(label) << " p=" << q;
      EXPECT_EQ(lemma_symbol_prediction(cover), root) << to_string(label) << " p=" << q;
      EXPECT_EQ(root, chi_one_plus_i(p) == 1) << to_string(label) << " p=" << q;
    }
  }
}

TEST(Els, EighthRootIdentity) {
  // z^4 = -1 gives (1 + z + 1/z)(1 + 1/z^2) = (z^3 - 1)^2, so 1 + sqrt2 and 1 + i share a symbol
  for (unsigned long q = 17; q < 20000; q += 8) {
    if (!is_probable_prime(Int(q))) continue;
    OddPrime p(q);
    const Int& m = p.value();
    Int z = eighth_root_of_unity(p);
    Int zi = inverse_mod(z, m);
    Int lhs = mod((1 + z + zi) * (1 + zi * zi), m);
    Int rhs = mod((z * z * z - 1) * (z * z * z - 1), m);
    EXPECT_EQ(lhs, rhs) << q;
    // z + 1/z is a square root of 2, z^2 one of -1
    EXPECT_EQ(mod((z + zi) * (z + zi), m), 2);
    EXPECT_EQ(legendre(1 + z + zi, p), legendre(1 + z * z, p)) << q;
  }
}
