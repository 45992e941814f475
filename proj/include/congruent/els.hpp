#pragma once

/**
 * @file els.hpp
 * @brief Quartic models y^2 = p q(x) of the 2-coverings C_{p,1..3} and
 * D_{p,1}, D_{p,2} of the congruent-number curve, with the local
 * solvability test at p for the D-covers.
 *
 * For p ≡ 1 (mod 8) the D-covers are solvable at every place other than p,
 * and at p exactly when q has a root in F_p. That root test is done with
 * gcd(q, x^p - x) in F_p[x], which costs O(log p) multiplications.
 */

#include <array>
#include <string_view>
#include <vector>

#include "congruent/modmath.hpp"

namespace congruent {

enum class CoverLabel { C1, C2, C3, D1, D2 };

inline std::string_view to_string(CoverLabel l) {
  switch (l) {
    case CoverLabel::C1: return "C1";
    case CoverLabel::C2: return "C2";
    case CoverLabel::C3: return "C3";
    case CoverLabel::D1: return "D1";
    case CoverLabel::D2: return "D2";
  }
  return "?";
}

struct QuarticCover {
  CoverLabel label;
  OddPrime p;
  std::array<long, 5> q_coeffs;  // constant term first
};

inline QuarticCover make_cover(CoverLabel label, const OddPrime& p) {
  switch (label) {
    case CoverLabel::C1: return {label, p, {1, 0, -6, 0, 1}};
    case CoverLabel::C2: return {label, p, {4, 0, 0, 0, 1}};
    case CoverLabel::C3: return {label, p, {1, 0, 0, 0, 1}};
    case CoverLabel::D1: return {label, p, {-7, -12, -6, -4, 1}};
    case CoverLabel::D2: return {label, p, {20, 24, 0, -4, 1}};
  }
  throw Error(ErrorCode::PreconditionViolation, "unknown cover label");
}

namespace poly {

// Dense polynomials over F_p, constant term first, no trailing zeros.
using Poly = std::vector<Int>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g (g nonzero).
inline Poly rem(Poly f, const Poly& g, const Int& p) {
  trim(f);
  Int lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    Int c = f.back() * lead_inv % p;
    std::size_t shift = f.size() - g.size();
    for (std::size_t k = 0; k < g.size(); ++k) f[shift + k] = mod(f[shift + k] - c * g[k], p);
    trim(f);
  }
  return f;
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, const Int& p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = mod(c, p);
  return rem(std::move(r), m, p);
}

inline Poly gcd(Poly a, Poly b, const Int& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace poly

/// True iff the cover's quartic has a root in F_p (local solvability at p).
inline bool locally_solvable_at_p(const QuarticCover& cover) {
  if (cover.label != CoverLabel::D1 && cover.label != CoverLabel::D2) {
    throw Error(ErrorCode::PreconditionViolation, "only the D-covers carry a solvability test");
  }
  if (cover.p.mod8() != 1) throw Error(ErrorCode::PreconditionViolation, "p must be 1 mod 8");
  const Int& p = cover.p.value();
  poly::Poly q;
  for (long c : cover.q_coeffs) q.push_back(mod(Int(c), p));
  poly::trim(q);

  // x^p mod q by square and multiply
  poly::Poly result{Int(1)};
  poly::Poly base = poly::rem({Int(0), Int(1)}, q, p);
  for (std::size_t bit = bit_length(p); bit-- > 0;) {
    result = poly::mul_mod(result, result, q, p);
    if (mpz_tstbit(p.get_mpz_t(), bit)) result = poly::mul_mod(result, base, q, p);
  }
  // x^p - x
  result.resize(std::max<std::size_t>(result.size(), 2), Int(0));
  result[1] = mod(result[1] - 1, p);
  auto g = poly::gcd(q, result, p);
  return g.size() > 1;
}

/**
 * Solvability at p as predicted by the quadratic symbols.
 * D1: q factors over Q(sqrt 2) into quadratics of discriminant 16(1 ± sqrt 2),
 *     so it is (1 + sqrt2'/p) = +1.
 * D2: q factors over Q(i) into quadratics of discriminant (1+i)^9 and
 *     -i(1+i)^9, so it is whether either image is a square mod p.
 */
inline bool lemma_symbol_prediction(const QuarticCover& cover) {
  if (cover.p.mod8() != 1) throw Error(ErrorCode::PreconditionViolation, "p must be 1 mod 8");
  const OddPrime& p = cover.p;
  const Int& q = p.value();
  switch (cover.label) {
    case CoverLabel::D1: {
      auto sqrt2 = sqrt_mod(Int(2), p);  // 2 is a square for p ≡ 1 mod 8
      return legendre(1 + *sqrt2, p) == 1;
    }
    case CoverLabel::D2: {
      Int i = sqrt_minus_one(p);
      Int disc = pow_mod(1 + i, Int(9), q);
      Int disc_conj = mod(-i * disc, q);
      return legendre(disc, p) == 1 || legendre(disc_conj, p) == 1;
    }
    default:
      throw Error(ErrorCode::PreconditionViolation, "only the D-covers carry a symbol prediction");
  }
}

}  // namespace congruent
