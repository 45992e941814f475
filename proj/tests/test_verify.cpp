#include <gtest/gtest.h>

#include "congruent/verify.hpp"

using namespace congruent;

TEST(Suites, PassAtSmallLimits) {
  for (const auto& name : verify::suite_names()) {
    auto r = verify::run_suite(name, name == "lemmas" ? 200 : 3000, 17);
    EXPECT_TRUE(r.pass) << name << ": " << r.counterexample;
    EXPECT_GT(r.checked, 0u) << name;
  }
  EXPECT_THROW(verify::run_suite("nope", 10, 1), Error);
}

TEST(Suites, LemmaNeedsItsHypothesis) {
  // Dropping p ≡ 1 mod 8: x^2 - D y^2 = p ≡ 5 mod 8 admits counterexamples,
  // so the suite is not passing vacuously.
  std::size_t violations = 0;
  for (long x = 1; x < 60; ++x) {
    for (long d = -60; d < 60; ++d) {
      Int n = Int(x * x) - Int(d);  // y = 1
      if (n <= 2 || mod(n, 8) != 5 || !is_probable_prime(n) || mod(Int(d), n) == 0) continue;
      OddPrime p(n);
      for (Int a : {Int(x), Int(n - x)}) {
        Int lin = mod(x + a, n);
        if (lin != 0 && legendre(a * lin, p) != 1) ++violations;
      }
    }
  }
  EXPECT_GT(violations, 0u);
}

TEST(Suites, DeltaChoicesAgreeForTwoHundredDigitPrimes) {
  verify::Result r;
  const Int base = verify::ten_to_200();
  for (long offset : {16737L, 28729L}) verify::check_delta(OddPrime(base + offset), false, r);
  EXPECT_TRUE(r.pass) << r.counterexample;
  EXPECT_EQ(r.checked, 2u);
}

TEST(PrimesUpTo, Counts) {
  EXPECT_EQ(verify::primes_up_to(100).size(), 24u);
  EXPECT_EQ(verify::primes_up_to(100, 8, 1).size(), 5u);  // 17 41 73 89 97
}
