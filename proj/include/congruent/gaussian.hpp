#pragma once

/**
 * @file gaussian.hpp
 * @brief Arithmetic in Z[i].
 *
 * Quadratic symbols modulo a Gaussian prime pi = u + v i of odd prime norm p
 * are computed through Z[i]/(pi) ≅ F_p, with i mapped to -u/v mod p (the only
 * choice making pi vanish).
 */

#include <ostream>
#include <utility>

#include "congruent/modmath.hpp"

namespace congruent {

struct GaussianInt {
  Int re = 0;
  Int im = 0;

  GaussianInt() = default;
  GaussianInt(Int r, Int i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianInt(long r, long i = 0) : re(r), im(i) {}

  static GaussianInt unit_i() { return {0L, 1L}; }

  Int norm() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }

  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianInt& operator*=(const GaussianInt& o) {
    Int r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
    os << g.re.get_str();
    if (g.im >= 0) os << '+';
    return os << g.im.get_str() << 'i';
  }
};

/// i^k for k taken mod 4.
inline GaussianInt i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1L, 0L};
    case 1: return {0L, 1L};
    case 2: return {-1L, 0L};
    default: return {0L, -1L};
  }
}

namespace detail {

// round(n / d) for d > 0, halves rounded up
inline Int round_div(const Int& n, const Int& d) {
  Int q;
  Int twice = 2 * n + d;
  Int den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace detail

/// Nearest-integer quotient x / y (y != 0); the remainder has norm < norm(y).
inline GaussianInt gi_round_div(const GaussianInt& x, const GaussianInt& y) {
  GaussianInt num = x * y.conj();
  Int n = y.norm();
  return {detail::round_div(num.re, n), detail::round_div(num.im, n)};
}

/// True when y divides x exactly; the quotient is written to q.
inline bool gi_divides(const GaussianInt& y, const GaussianInt& x, GaussianInt* q = nullptr) {
  if (y.is_zero()) return x.is_zero();
  GaussianInt num = x * y.conj();
  Int n = y.norm();
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t())) {
    return false;
  }
  if (q) *q = {num.re / n, num.im / n};
  return true;
}

/// Canonical associate: odd elements get the associate with odd, positive real
/// part; even elements get the first-quadrant associate (re > 0, im >= 0).
inline GaussianInt gi_normalize(const GaussianInt& x) {
  if (x.is_zero()) return x;
  const bool odd = mpz_odd_p(x.norm().get_mpz_t()) != 0;
  for (int k = 0; k < 4; ++k) {
    GaussianInt y = i_power(k) * x;
    if (odd) {
      if (y.re > 0 && mpz_odd_p(y.re.get_mpz_t())) return y;
    } else if (y.re > 0 && y.im >= 0) {
      return y;
    }
  }
  return x;  // unreachable for nonzero x
}

inline GaussianInt gi_gcd(GaussianInt x, GaussianInt y) {
  if (x.is_zero() && y.is_zero()) {
    throw Error(ErrorCode::PreconditionViolation, "gcd(0, 0) is undefined");
  }
  while (!y.is_zero()) {
    GaussianInt r = x - gi_round_div(x, y) * y;
    x = std::move(y);
    y = std::move(r);
  }
  return gi_normalize(x);
}

/// The associate i^k x with re odd, im even and re + im ≡ 1 (mod 4).
inline GaussianInt primary_associate(const GaussianInt& x) {
  if (mpz_even_p(x.norm().get_mpz_t())) {
    throw Error(ErrorCode::PreconditionViolation, "primary associate needs an odd element");
  }
  for (int k = 0; k < 4; ++k) {
    GaussianInt y = i_power(k) * x;
    if (mpz_odd_p(y.re.get_mpz_t()) && mpz_even_p(y.im.get_mpz_t()) && mod(y.re + y.im, 4) == 1) return y;
  }
  throw Error(ErrorCode::ComputeFailed, "no primary associate found");  // unreachable
}

/// p = u^2 + v^2 with u odd, v even, both positive.
struct TwoSquares {
  Int u;
  Int v;
};

/// Hermite-Serret: gcd(p, w + i) with w^2 ≡ -1 (mod p) has norm p.
inline TwoSquares two_squares(const OddPrime& p) {
  if (p.mod4() != 1) {
    throw Error(ErrorCode::PreconditionViolation, p.value().get_str() + " is not 1 mod 4; not a sum of two squares");
  }
  GaussianInt g = gi_gcd(GaussianInt(p.value()), GaussianInt(sqrt_minus_one(p), 1));
  Int a = abs(g.re), b = abs(g.im);
  if (mpz_even_p(a.get_mpz_t())) std::swap(a, b);
  return {a, b};
}

/// Image of x in F_p under Z[i]/(pi) ≅ F_p, where p = norm(pi) must be an odd prime.
struct GaussianResidueMap {
  OddPrime p;
  Int i_image;

  explicit GaussianResidueMap(const GaussianInt& pi) : p(checked_norm(pi)), i_image(0) {
    // pi = u + v i ≡ 0  =>  i ≡ -u / v
    i_image = mod(-pi.re * inverse_mod(pi.im, p.value()), p.value());
  }

  Int operator()(const GaussianInt& x) const { return mod(x.re + x.im * i_image, p.value()); }

 private:
  static OddPrime checked_norm(const GaussianInt& pi) {
    Int n = pi.norm();
    if (n == 2 || !is_probable_prime(n)) {
      throw Error(ErrorCode::PreconditionViolation, "norm of the modulus is not an odd rational prime");
    }
    return OddPrime(n);
  }
};

/// Quadratic residue symbol (x / pi) for a Gaussian prime pi of odd prime norm.
inline int gi_symbol(const GaussianInt& x, const GaussianInt& pi) {
  GaussianResidueMap map(pi);
  return legendre(map(x), map.p);
}

}  // namespace congruent
