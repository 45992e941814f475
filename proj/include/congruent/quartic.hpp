#pragma once

/**
 * @file quartic.hpp
 * @brief Arithmetic in K1 = Q(alpha), alpha^4 - 2 alpha^2 + 2 = 0, and the
 * solver for the relative norm equation a^2 - (1+i) b^2 = p over Z[i].
 *
 * Conventions:
 *  - i = alpha^2 - 1, so alpha^2 = 1 + i and every element of Z[alpha] is
 *    a + b alpha with a, b in Z[i].
 *  - The relative norm to Q(i) uses the conjugation alpha -> -alpha:
 *    Norm(a + b alpha) = a^2 - (1+i) b^2. Under it Norm(i) = -1 and
 *    Norm(1 + alpha) = -i.
 *  - Z[alpha] is taken to be the full ring of integers with class number 1.
 *    Nothing downstream trusts that blindly: every delta is re-verified
 *    against the norm equation, and a missing generator is an error.
 */

#include <array>
#include <optional>
#include <ostream>
#include <tuple>
#include <vector>

#include "congruent/gaussian.hpp"
#include "congruent/lattice.hpp"
#include "congruent/modmath.hpp"

namespace congruent {

/// c0 + c1 alpha + c2 alpha^2 + c3 alpha^3.
struct QuarticInt {
  std::array<Int, 4> c{0, 0, 0, 0};

  QuarticInt() = default;
  explicit QuarticInt(std::array<Int, 4> coeffs) : c(std::move(coeffs)) {}
  QuarticInt(long c0, long c1, long c2, long c3) : c{Int(c0), Int(c1), Int(c2), Int(c3)} {}

  static QuarticInt alpha() { return {0, 1, 0, 0}; }
  static QuarticInt one() { return {1, 0, 0, 0}; }

  /// a + b alpha with a, b in Z[i].
  static QuarticInt from_relative(const GaussianInt& a, const GaussianInt& b) {
    // a_re + a_im (alpha^2 - 1) + b_re alpha + b_im (alpha^3 - alpha)
    return QuarticInt({a.re - a.im, b.re - b.im, a.im, b.im});
  }

  std::pair<GaussianInt, GaussianInt> to_relative() const {
    return {GaussianInt(c[0] + c[2], c[2]), GaussianInt(c[1] + c[3], c[3])};
  }

  QuarticInt& operator+=(const QuarticInt& o) {
    for (int k = 0; k < 4; ++k) c[k] += o.c[k];
    return *this;
  }
  QuarticInt& operator-=(const QuarticInt& o) {
    for (int k = 0; k < 4; ++k) c[k] -= o.c[k];
    return *this;
  }

  friend QuarticInt operator+(QuarticInt a, const QuarticInt& b) { return a += b; }
  friend QuarticInt operator-(QuarticInt a, const QuarticInt& b) { return a -= b; }
  friend QuarticInt operator-(const QuarticInt& a) { return QuarticInt() - a; }

  friend QuarticInt operator*(const QuarticInt& x, const QuarticInt& y) {
    std::array<Int, 7> t;
    for (auto& v : t) v = 0;
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) t[j + k] += x.c[j] * y.c[k];
    }
    // alpha^k = 2 alpha^(k-2) - 2 alpha^(k-4)
    for (int k = 6; k >= 4; --k) {
      t[k - 2] += 2 * t[k];
      t[k - 4] -= 2 * t[k];
    }
    return QuarticInt({t[0], t[1], t[2], t[3]});
  }

  friend bool operator==(const QuarticInt& a, const QuarticInt& b) { return a.c == b.c; }

  friend std::ostream& operator<<(std::ostream& os, const QuarticInt& x) {
    return os << '(' << x.c[0].get_str() << ", " << x.c[1].get_str() << ", " << x.c[2].get_str() << ", "
              << x.c[3].get_str() << ')';
  }
};

inline QuarticInt power(QuarticInt base, unsigned e) {
  QuarticInt r = QuarticInt::one();
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

/// Norm to Q(i) under alpha -> -alpha.
inline GaussianInt relative_norm(const QuarticInt& x) {
  auto [a, b] = x.to_relative();
  return a * a - GaussianInt(1L, 1L) * b * b;
}

inline Int absolute_norm(const QuarticInt& x) { return relative_norm(x).norm(); }

/// A degree-one prime of K1 over p, given by the root r of the minimal
/// polynomial that alpha maps to.
struct PrimeAboveP {
  OddPrime p;
  Int r;
  Int i_image;  // r^2 - 1

  PrimeAboveP(OddPrime prime, Int root) : p(std::move(prime)), r(std::move(root)) {
    const Int& q = p.value();
    r = mod(r, q);
    i_image = mod(r * r - 1, q);
    if (mod(r * r * r * r - 2 * r * r + 2, q) != 0) {
      throw Error(ErrorCode::PreconditionViolation, r.get_str() + " is not a root of x^4-2x^2+2 mod " + q.get_str());
    }
  }
};

/// x evaluated at alpha = r, reduced mod p.
inline Int embed(const QuarticInt& x, const PrimeAboveP& at) {
  const Int& q = at.p.value();
  Int acc = 0;
  for (int k = 3; k >= 0; --k) acc = mod(acc * at.r + x.c[k], q);
  return acc;
}

inline bool splits_completely(const OddPrime& p) { return quartic_roots(p).size() == 4; }

/// The four primes above p, ordered r, -r, s, -s with r^2 = 1+i', s^2 = 1-i'.
inline std::vector<PrimeAboveP> primes_above(const OddPrime& p) {
  auto roots = quartic_roots(p);
  if (roots.size() != 4) {
    throw Error(ErrorCode::NotSplit, p.value().get_str() + " does not split completely in Q(sqrt(1+i))");
  }
  std::vector<PrimeAboveP> out;
  out.reserve(4);
  for (auto& r : roots) out.emplace_back(p, r);
  return out;
}

using Row = lattice::Vec<4>;

/// Z-basis of an ideal of Z[alpha], rows in the coordinates c0..c3.
struct IdealLattice {
  std::array<Row, 4> basis;
  Int ideal_norm;

  Int determinant() const { return lattice::determinant<4>(basis); }
};

/**
 * The scaled Minkowski form sum_sigma sigma(x) conj(sigma(y)) over the four
 * complex embeddings. Expanding the embeddings +-sqrt(1+i), +-sqrt(1-i)
 * gives A(x,y) on the even coordinates (c0, c2) plus sqrt(2) * A on the odd
 * ones (c1, c3), with A the form [[4, 4], [4, 8]]. sqrt(2) is carried as
 * floor(sqrt(2) * 2^bits), everything else as 2^bits times its exact value.
 */
class MinkowskiForm {
 public:
  explicit MinkowskiForm(std::size_t precision_bits) : scale_(1) {
    mpz_mul_2exp(scale_.get_mpz_t(), scale_.get_mpz_t(), precision_bits);
    Int two_scale_sq = 2 * scale_ * scale_;
    mpz_sqrt(sqrt2_.get_mpz_t(), two_scale_sq.get_mpz_t());
  }

  Int operator()(const Row& x, const Row& y) const {
    Int even = 4 * x[0] * y[0] + 4 * (x[0] * y[2] + x[2] * y[0]) + 8 * x[2] * y[2];
    Int odd = 4 * x[1] * y[1] + 4 * (x[1] * y[3] + x[3] * y[1]) + 8 * x[3] * y[3];
    return scale_ * even + sqrt2_ * odd;
  }

  const Int& scale() const { return scale_; }
  const Int& sqrt2_scaled() const { return sqrt2_; }

 private:
  Int scale_;
  Int sqrt2_;
};

/**
 * HNF basis of P_r P_s, where r, s are the roots over the two different
 * Gaussian primes above p. The relative norm of this ideal is (p), so any
 * generator solves the norm equation up to a unit.
 */
inline IdealLattice build_ideal(const OddPrime& p) {
  auto primes = primes_above(p);
  const Int& q = p.value();
  const Int& r = primes[0].r;
  const Int& s = primes[2].r;
  // (x - r)(x - s) = x^2 + g1 x + g0 mod p
  Int g1 = mod(-(r + s), q);
  Int g0 = mod(r * s, q);
  IdealLattice lat;
  lat.basis[0] = {q, 0, 0, 0};
  lat.basis[1] = {0, q, 0, 0};
  lat.basis[2] = {g0, g1, 1, 0};
  lat.basis[3] = {0, g0, g1, 1};
  lat.ideal_norm = q * q;
  if (abs(lat.determinant()) != lat.ideal_norm) {
    throw Error(ErrorCode::ComputeFailed, "ideal basis has the wrong determinant");
  }
  return lat;
}

inline std::size_t minimum_precision_bits(const IdealLattice& lattice) {
  Int root;
  mpz_sqrt(root.get_mpz_t(), lattice.ideal_norm.get_mpz_t());
  return 2 * bit_length(root) + 64;
}

/// LLL (delta = 0.99) on the ideal under the scaled Minkowski form.
inline IdealLattice lll_reduce(const IdealLattice& lat, std::size_t precision_bits) {
  if (precision_bits < minimum_precision_bits(lat)) {
    throw Error(ErrorCode::PreconditionViolation, "precision below 2*bitlength(p)+64");
  }
  std::vector<Row> rows(lat.basis.begin(), lat.basis.end());
  lattice::lll<4>(rows, MinkowskiForm(precision_bits));
  IdealLattice out;
  for (std::size_t k = 0; k < 4; ++k) out.basis[k] = rows[k];
  out.ideal_norm = lat.ideal_norm;
  return out;
}

/// Certified solution of a^2 - (1+i) b^2 = p, delta = a + b alpha.
struct DeltaSolution {
  QuarticInt delta;
  Int p;
  GaussianInt a;
  GaussianInt b;

  /// Exact recomputation of the norm equation.
  bool verify() const { return relative_norm(delta) == GaussianInt(p) && delta == QuarticInt::from_relative(a, b); }
};

namespace detail {

// Unit u with Norm(g) = u p, or nullopt.
inline std::optional<int> norm_unit_exponent(const QuarticInt& g, const Int& p) {
  GaussianInt n = relative_norm(g);
  GaussianInt w;
  if (!gi_divides(GaussianInt(p), n, &w)) return std::nullopt;
  for (int k = 0; k < 4; ++k) {
    if (w == i_power(k)) return k;
  }
  return std::nullopt;
}

// Multiply by (1+alpha)^m so the norm becomes exactly p: Norm(1+alpha) = -i = i^3.
inline QuarticInt adjust_unit(const QuarticInt& g, int k) {
  // i^k (i^3)^m = 1  <=>  k + 3m ≡ 0 (mod 4)  <=>  m ≡ k (mod 4)
  return g * power(QuarticInt(1, 1, 0, 0), static_cast<unsigned>(k));
}

// Sign so that the first nonzero of (a_re, a_im, b_re, b_im) is positive.
inline QuarticInt canonical_sign(const QuarticInt& x) {
  auto [a, b] = x.to_relative();
  for (const Int* v : {&a.re, &a.im, &b.re, &b.im}) {
    if (*v > 0) return x;
    if (*v < 0) return -x;
  }
  return x;
}

}  // namespace detail

inline DeltaSolution make_delta_solution(const QuarticInt& g, const Int& p) {
  DeltaSolution sol;
  sol.delta = g;
  sol.p = p;
  std::tie(sol.a, sol.b) = g.to_relative();
  if (!sol.verify()) throw Error(ErrorCode::ComputeFailed, "delta certificate failed for p = " + p.get_str());
  return sol;
}

/// Turn any element of norm (unit * p) into the canonical delta.
inline std::optional<DeltaSolution> normalize_generator(const QuarticInt& g, const Int& p) {
  auto k = detail::norm_unit_exponent(g, p);
  if (!k) return std::nullopt;
  return make_delta_solution(detail::canonical_sign(detail::adjust_unit(g, *k)), p);
}

/**
 * Solve Norm_{K1/Q(i)}(delta) = p. Pipeline: ideal P_r P_s -> LLL ->
 * generator search (rows, small combinations, then Fincke-Pohst up to
 * 4 sqrt(2) p in the Minkowski norm) -> unit adjustment -> certificate.
 */
inline DeltaSolution solve_delta(const OddPrime& p) {
  const IdealLattice ideal = build_ideal(p);
  const Int& q = p.value();

  const std::size_t start_bits = minimum_precision_bits(ideal);
  std::size_t bits = start_bits;
  IdealLattice reduced;
  for (;;) {
    try {
      reduced = lll_reduce(ideal, bits);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted || bits >= 16 * start_bits) throw;
      bits *= 2;
    }
  }

  for (const auto& row : reduced.basis) {
    if (auto sol = normalize_generator(QuarticInt(row), q)) return *sol;
  }

  std::vector<Row> rows(reduced.basis.begin(), reduced.basis.end());
  for (long c0 = -2; c0 <= 2; ++c0) {
    for (long c1 = -2; c1 <= 2; ++c1) {
      for (long c2 = -2; c2 <= 2; ++c2) {
        for (long c3 = -2; c3 <= 2; ++c3) {
          auto v = lattice::combine<4>(rows, {Int(c0), Int(c1), Int(c2), Int(c3)});
          if (lattice::is_zero(v)) continue;
          if (auto sol = normalize_generator(QuarticInt(v), q)) return *sol;
        }
      }
    }
  }

  MinkowskiForm form(bits);
  Int bound = 4 * q * (form.sqrt2_scaled() + 1);
  std::optional<DeltaSolution> found;
  lattice::enumerate_short<4>(rows, form, bound, [&](const Row& v, const std::vector<Int>&) {
    found = normalize_generator(QuarticInt(v), q);
    return found.has_value();
  });
  if (found) return *found;
  throw Error(ErrorCode::GeneratorNotFound, "no generator of norm p found for p = " + q.get_str());
}

}  // namespace congruent
