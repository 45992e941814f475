#include <gtest/gtest.h>

#include <random>
#include <set>

#include "congruent/lattice.hpp"

using namespace congruent;
using namespace congruent::lattice;

namespace {

struct DotForm {
  template <std::size_t N>
  Int operator()(const Vec<N>& x, const Vec<N>& y) const {
    Int s = 0;
    for (std::size_t i = 0; i < N; ++i) s += x[i] * y[i];
    return s;
  }
};

// x^T G y for a fixed positive definite integer G.
struct GramForm {
  std::array<std::array<long, 3>, 3> g;
  Int operator()(const Vec<3>& x, const Vec<3>& y) const {
    Int s = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) s += x[i] * g[i][j] * y[j];
    }
    return s;
  }
};

}  // namespace

TEST(Determinant, Bareiss) {
  std::array<Vec<3>, 3> m{Vec<3>{2, 0, 1}, Vec<3>{1, 3, 2}, Vec<3>{1, 1, 2}};
  EXPECT_EQ(determinant<3>(m), 6);
  std::array<Vec<3>, 3> swap_needed{Vec<3>{0, 1, 0}, Vec<3>{1, 0, 0}, Vec<3>{0, 0, 5}};
  EXPECT_EQ(determinant<3>(swap_needed), -5);
  std::array<Vec<2>, 2> singular{Vec<2>{2, 4}, Vec<2>{1, 2}};
  EXPECT_EQ(determinant<2>(singular), 0);
}

TEST(Lll, ReducesAndPreservesTheLattice) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> big(-100000, 100000);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec<4>> basis(4);
    std::array<Vec<4>, 4> before;
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < 4; ++j) basis[k][j] = big(rng);
      before[k] = basis[k];
    }
    Int det = determinant<4>(before);
    if (det == 0) continue;
    lll<4>(basis, DotForm{});
    std::array<Vec<4>, 4> after;
    std::copy(basis.begin(), basis.end(), after.begin());
    EXPECT_EQ(abs(determinant<4>(after)), abs(det));
    EXPECT_TRUE(is_lll_reduced<4>(basis, DotForm{}));
  }
}

TEST(Lll, KnownShortVector) {
  // Lattice spanned by (1, 0, 0, 10^6), (0, 1, 0, 10^6 + 1), (0, 0, 1, 2 * 10^6 + 1)
  // contains (1, 1, -1, 0).
  std::vector<Vec<4>> basis{Vec<4>{1, 0, 0, 1000000}, Vec<4>{0, 1, 0, 1000001}, Vec<4>{0, 0, 1, 2000001}};
  lll<4>(basis, DotForm{});
  EXPECT_EQ(DotForm{}(basis[0], basis[0]), 3);
}

TEST(Lll, RejectsIndefiniteForm) {
  auto indefinite = [](const Vec<2>& x, const Vec<2>& y) { return Int(x[0] * y[0] - x[1] * y[1]); };
  std::vector<Vec<2>> basis{Vec<2>{0, 1}, Vec<2>{1, 0}};
  try {
    lll<2>(basis, indefinite);
    FAIL() << "expected PrecisionExhausted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PrecisionExhausted);
  }
}

TEST(FinckePohst, MatchesBoxEnumeration) {
  GramForm form{{{{5, 2, 1}, {2, 6, -1}, {1, -1, 4}}}};
  std::vector<Vec<3>> basis{Vec<3>{1, 0, 0}, Vec<3>{0, 1, 0}, Vec<3>{0, 0, 1}};
  const Int bound = 40;

  std::set<std::array<long, 3>> expected;
  for (long a = -10; a <= 10; ++a) {
    for (long b = -10; b <= 10; ++b) {
      for (long c = -10; c <= 10; ++c) {
        Vec<3> v{a, b, c};
        if (is_zero(v) || form(v, v) > bound) continue;
        // keep one of each ±v: first nonzero from the top is positive
        long top = c != 0 ? c : (b != 0 ? b : a);
        if (top > 0) expected.insert({a, b, c});
      }
    }
  }

  std::set<std::array<long, 3>> found;
  auto visited = enumerate_short<3>(basis, form, bound, [&](const Vec<3>& v, const std::vector<Int>&) {
    found.insert({v[0].get_si(), v[1].get_si(), v[2].get_si()});
    return false;
  });
  EXPECT_EQ(visited, expected.size());
  EXPECT_EQ(found, expected);
}
