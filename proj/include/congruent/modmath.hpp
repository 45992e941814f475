#pragma once

/**
 * @file modmath.hpp
 * @brief Arbitrary-precision modular arithmetic over F_p.
 *
 * Integers are GMP `mpz_class` values throughout. Square roots are returned
 * in canonical form (the smaller of the two roots), so every residue the
 * library reports is reproducible.
 */

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "congruent/error.hpp"

namespace congruent {

using Int = mpz_class;

inline std::size_t bit_length(const Int& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

/// Nonnegative residue of a modulo m (m > 0).
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int pow_mod(const Int& base, const Int& exp, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Inverse of a modulo m; throws when gcd(a, m) != 1.
inline Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::PreconditionViolation, "element is not invertible modulo " + m.get_str());
  }
  return r;
}

/// Strong probable-prime test. GMP runs Baillie-PSW followed by extra
/// Miller-Rabin rounds; below 2^64 the answer is exact.
inline bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// An odd rational prime together with its residue mod 16.
class OddPrime {
 public:
  explicit OddPrime(Int value) : value_(std::move(value)) {
    if (value_ == 2) {
      throw Error(ErrorCode::PreconditionViolation, "p = 2 is excluded; only odd primes are classified");
    }
    if (!is_probable_prime(value_)) {
      throw Error(ErrorCode::PreconditionViolation, value_.get_str() + " is not prime");
    }
    residue_mod_16_ = static_cast<unsigned>(mpz_fdiv_ui(value_.get_mpz_t(), 16));
  }

  explicit OddPrime(unsigned long value) : OddPrime(Int(value)) {}

  const Int& value() const noexcept { return value_; }
  unsigned mod16() const noexcept { return residue_mod_16_; }
  unsigned mod8() const noexcept { return residue_mod_16_ % 8; }
  unsigned mod4() const noexcept { return residue_mod_16_ % 4; }

  friend bool operator==(const OddPrime& a, const OddPrime& b) { return a.value_ == b.value_; }

 private:
  Int value_;
  unsigned residue_mod_16_ = 0;
};

/// Legendre symbol (a/p) in {-1, 0, +1}; a may be any integer.
inline int legendre(const Int& a, const OddPrime& p) {
  Int r = mod(a, p.value());
  return mpz_jacobi(r.get_mpz_t(), p.value().get_mpz_t());
}

/// Square root of a modulo p by Tonelli-Shanks, canonical root in [0, p/2].
inline std::optional<Int> sqrt_mod(const Int& a, const OddPrime& p) {
  const Int& q = p.value();
  Int n = mod(a, q);
  if (n == 0) return Int(0);
  if (legendre(n, p) != 1) return std::nullopt;

  // q - 1 = odd * 2^s
  Int odd = q - 1;
  unsigned long s = mpz_scan1(odd.get_mpz_t(), 0);
  odd >>= s;

  Int root;
  if (s == 1) {
    root = pow_mod(n, (q + 1) / 4, q);
  } else {
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int c = pow_mod(z, odd, q);
    Int t = pow_mod(n, odd, q);
    root = pow_mod(n, (odd + 1) / 2, q);
    unsigned long m = s;
    while (t != 1) {
      unsigned long i = 0;
      Int t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % q;
        ++i;
      }
      Int b = c;
      for (unsigned long j = 0; j + 1 < m - i; ++j) b = b * b % q;
      root = root * b % q;
      c = b * b % q;
      t = t * c % q;
      m = i;
    }
  }
  Int other = q - root;
  return root <= other ? root : other;
}

/// The canonical square root of -1 modulo p (p ≡ 1 mod 4).
inline Int sqrt_minus_one(const OddPrime& p) {
  auto r = sqrt_mod(Int(-1), p);
  if (!r) throw Error(ErrorCode::PreconditionViolation, "-1 is not a square modulo " + p.value().get_str());
  return *r;
}

/// A primitive eighth root of unity z (z^4 ≡ -1), taken as sqrt_mod(i', p).
inline Int eighth_root_of_unity(const OddPrime& p) {
  if (p.mod8() != 1) {
    throw Error(ErrorCode::PreconditionViolation,
                "no primitive eighth root of unity modulo " + p.value().get_str() + " (p is not 1 mod 8)");
  }
  auto z = sqrt_mod(sqrt_minus_one(p), p);
  // i' is a square whenever p ≡ 1 mod 8
  return *z;
}

/// All roots of x^4 - 2x^2 + 2 in F_p, as ±sqrt(1+i') then ±sqrt(1-i').
/// Four roots exactly when p splits completely in Q(sqrt(1+i)).
inline std::vector<Int> quartic_roots(const OddPrime& p) {
  std::vector<Int> roots;
  if (p.mod4() != 1) return roots;
  const Int& q = p.value();
  Int i = sqrt_minus_one(p);
  for (const Int& square : {mod(1 + i, q), mod(1 - i, q)}) {
    if (auto r = sqrt_mod(square, p)) {
      roots.push_back(*r);
      roots.push_back(q - *r);
    }
  }
  return roots;
}

/// Parse a decimal integer; nullopt on malformed input.
inline std::optional<Int> parse_integer(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t k = start; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') return std::nullopt;
  }
  Int n;
  if (n.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) return std::nullopt;
  return n;
}

}  // namespace congruent
