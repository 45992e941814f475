#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force ground truth for the criteria.
 *
 * Everything here enumerates exhaustively over machine integers and shares
 * no code path with the symbol computations it is compared against.
 */

#include <cmath>
#include <cstdint>
#include <optional>

#include "congruent/modmath.hpp"
#include "congruent/quartic.hpp"

namespace congruent::oracles {

inline constexpr std::int64_t kDefaultBound = 1'000'000;

namespace detail {

inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_square(std::int64_t n) {
  if (n < 0) return false;
  std::int64_t r = isqrt(n);
  return r * r == n;
}

inline std::int64_t small_value(const Int& n, std::int64_t bound) {
  if (!mpz_fits_slong_p(n.get_mpz_t()) || n > bound) {
    throw Error(ErrorCode::BoundExceeded, n.get_str() + " exceeds the oracle bound " + std::to_string(bound));
  }
  return n.get_si();
}

inline int v2(std::int64_t n) {
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

}  // namespace detail

struct FormCount {
  std::int64_t p;
  std::int64_t h;
  int v2;
};

/// h(-4p) as the number of reduced forms (a, b, c) of discriminant -4p.
inline FormCount class_number(const OddPrime& prime, std::int64_t bound = kDefaultBound) {
  if (prime.mod4() != 1) throw Error(ErrorCode::PreconditionViolation, "class_number needs p ≡ 1 mod 4");
  const std::int64_t p = detail::small_value(prime.value(), bound);
  std::int64_t h = 0;
  // reduced: -a < b <= a <= c, b >= 0 if a == c; b is even since the discriminant is
  for (std::int64_t a = 1; 3 * a * a <= 4 * p; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (b % 2 != 0) continue;
      std::int64_t num = b * b + 4 * p;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      ++h;
    }
  }
  return {p, h, detail::v2(h)};
}

/// Number of (x, y, z) in Z^3 with x^2 + y^2 + z^2 = n.
inline std::int64_t r3(std::int64_t n, std::int64_t bound = kDefaultBound) {
  if (n < 0) throw Error(ErrorCode::PreconditionViolation, "r3 needs n >= 0");
  if (n > bound) throw Error(ErrorCode::BoundExceeded, "r3 argument exceeds the oracle bound");
  std::int64_t count = 0;
  for (std::int64_t x = -detail::isqrt(n); x * x <= n; ++x) {
    for (std::int64_t y = -detail::isqrt(n - x * x); x * x + y * y <= n; ++y) {
      std::int64_t rest = n - x * x - y * y;
      if (!detail::is_square(rest)) continue;
      count += rest == 0 ? 1 : 2;
    }
  }
  return count;
}

namespace detail {

// #{(x, y, z) : n = 2x^2 + y^2 + c z^2}
inline std::int64_t ternary_count(std::int64_t n, std::int64_t c) {
  std::int64_t count = 0;
  for (std::int64_t z = -isqrt(n / c); c * z * z <= n; ++z) {
    for (std::int64_t x = -isqrt((n - c * z * z) / 2); 2 * x * x + c * z * z <= n; ++x) {
      std::int64_t rest = n - 2 * x * x - c * z * z;
      if (!is_square(rest)) continue;
      count += rest == 0 ? 1 : 2;
    }
  }
  return count;
}

inline bool squarefree(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

}  // namespace detail

/// Tunnell's coefficient for odd n: #{2x^2+y^2+32z^2 = n} - #{2x^2+y^2+8z^2 = n} / 2.
/// Only |a_n| and its 2-adic valuation are meaningful to callers.
inline std::int64_t tunnell_a(std::int64_t n, std::int64_t bound = kDefaultBound) {
  if (n <= 0 || n % 2 == 0 || !detail::squarefree(n)) {
    throw Error(ErrorCode::PreconditionViolation, "tunnell_a needs an odd squarefree positive n");
  }
  if (n > bound) throw Error(ErrorCode::BoundExceeded, "tunnell_a argument exceeds the oracle bound");
  return detail::ternary_count(n, 32) - detail::ternary_count(n, 8) / 2;
}

/// p = x^2 + 32 y^2 for some integers x, y.
inline bool rep_x2_32y2(const Int& p) {
  for (Int y = 0; 32 * y * y <= p; ++y) {
    Int rest = p - 32 * y * y;
    if (mpz_perfect_square_p(rest.get_mpz_t())) return true;
  }
  return false;
}

/**
 * Exhaustive search for a, b in Z[i] with all components in [-bound, bound]
 * and a^2 - (1+i) b^2 = p. For each b the equation fixes a^2, whose square
 * roots in Z[i] are found exactly, so the whole box is covered.
 */
inline std::optional<DeltaSolution> delta_box_search(const OddPrime& prime, std::int64_t bound) {
  const std::int64_t p = detail::small_value(prime.value(), kDefaultBound);
  if (bound * bound < 4 * p) throw Error(ErrorCode::PreconditionViolation, "box bound below 2 sqrt(p)");
  for (std::int64_t br = -bound; br <= bound; ++br) {
    for (std::int64_t bi = -bound; bi <= bound; ++bi) {
      // a^2 = p + (1+i)(br + bi i)^2
      std::int64_t sq_re = br * br - bi * bi, sq_im = 2 * br * bi;
      std::int64_t x = p + sq_re - sq_im, y = sq_re + sq_im;
      // a = u + v i with u^2 - v^2 = x, 2uv = y, u^2 + v^2 = sqrt(x^2 + y^2)
      __int128 n2 = static_cast<__int128>(x) * x + static_cast<__int128>(y) * y;
      auto n = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n2)));
      while (static_cast<__int128>(n) * n > n2) --n;
      while (static_cast<__int128>(n + 1) * (n + 1) <= n2) ++n;
      if (static_cast<__int128>(n) * n != n2) continue;
      if ((n + x) % 2 != 0) continue;
      std::int64_t u2 = (n + x) / 2, v2 = (n - x) / 2;
      if (!detail::is_square(u2) || !detail::is_square(v2)) continue;
      std::int64_t u = detail::isqrt(u2), v = detail::isqrt(v2);
      if (2 * u * v != y) v = -v;
      if (2 * u * v != y) continue;
      if (u > bound || v > bound || -v > bound) continue;
      if (u == 0 && v < 0) v = -v;
      GaussianInt a(u, v), b(br, bi);
      return make_delta_solution(QuarticInt::from_relative(a, b), prime.value());
    }
  }
  return std::nullopt;
}

}  // namespace congruent::oracles
