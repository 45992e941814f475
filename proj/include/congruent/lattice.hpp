#pragma once

/**
 * @file lattice.hpp
 * @brief Exact lattice reduction and short-vector enumeration.
 *
 * Both algorithms take the inner product as a callable, so they run on any
 * positive definite integral form, not only the Euclidean one. LLL follows
 * the all-integer variant (Gram-Schmidt data kept as the integers d_k and
 * lambda_kj), so no floating point is involved at any precision.
 */

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "congruent/error.hpp"
#include "congruent/modmath.hpp"

namespace congruent::lattice {

template <std::size_t N>
using Vec = std::array<Int, N>;

template <std::size_t N>
Vec<N> operator+(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
Vec<N> scaled(const Vec<N>& a, const Int& c) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] * c;
  return r;
}

template <std::size_t N>
bool is_zero(const Vec<N>& a) {
  for (const auto& x : a) {
    if (x != 0) return false;
  }
  return true;
}

/// Integer combination sum_k coeffs[k] * basis[k].
template <std::size_t N>
Vec<N> combine(const std::vector<Vec<N>>& basis, const std::vector<Int>& coeffs) {
  Vec<N> r{};
  for (auto& x : r) x = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t i = 0; i < N; ++i) r[i] += coeffs[k] * basis[k][i];
  }
  return r;
}

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
template <std::size_t N>
Int determinant(std::array<Vec<N>, N> m) {
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < N && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == N) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[N - 1][N - 1];
}

/// LLL parameter delta = num / den, 1/4 < delta < 1.
struct Delta {
  long num = 99;
  long den = 100;
};

/**
 * Integral LLL reduction of `basis` in place under the symmetric bilinear
 * form `ip`. Throws PrecisionExhausted if the form is not positive definite
 * on the span (a Gram-Schmidt denominator d_k <= 0 shows up).
 */
template <std::size_t N, class Form>
void lll(std::vector<Vec<N>>& basis, const Form& ip, Delta delta = {}) {
  const std::size_t n = basis.size();
  if (n == 0) return;
  // d[0] = 1, d[k] = det Gram(b_1..b_k); lambda[k][j] = d[j+1] * mu_kj
  std::vector<Int> d(n + 1);
  std::vector<std::vector<Int>> lambda(n, std::vector<Int>(n));
  d[0] = 1;
  d[1] = ip(basis[0], basis[0]);
  if (d[1] <= 0) throw Error(ErrorCode::PrecisionExhausted, "Gram matrix is not positive definite");

  auto reduce = [&](std::size_t k, std::size_t l) {
    // size-reduce b_k against b_l
    if (2 * abs(lambda[k][l]) <= d[l + 1]) return;
    Int num = 2 * lambda[k][l] + d[l + 1];
    Int den = 2 * d[l + 1];
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (std::size_t i = 0; i < N; ++i) basis[k][i] -= q * basis[l][i];
    lambda[k][l] -= q * d[l + 1];
    for (std::size_t i = 0; i < l; ++i) lambda[k][i] -= q * lambda[l][i];
  };

  auto swap = [&](std::size_t k, std::size_t kmax) {
    std::swap(basis[k], basis[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda[k][j], lambda[k - 1][j]);
    Int lam = lambda[k][k - 1];
    Int b = (d[k - 1] * d[k + 1] + lam * lam) / d[k];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Int t = lambda[i][k];
      lambda[i][k] = (d[k + 1] * lambda[i][k - 1] - lam * t) / d[k];
      lambda[i][k - 1] = (b * t + lam * lambda[i][k]) / d[k + 1];
    }
    d[k] = b;
  };

  std::size_t k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        Int u = ip(basis[k], basis[j]);
        for (std::size_t i = 0; i < j; ++i) u = (d[i + 1] * u - lambda[k][i] * lambda[j][i]) / d[i];
        if (j < k) {
          lambda[k][j] = u;
        } else {
          d[k + 1] = u;
        }
      }
      if (d[k + 1] <= 0) throw Error(ErrorCode::PrecisionExhausted, "Gram matrix is not positive definite");
    }
    reduce(k, k - 1);
    const Int& lam = lambda[k][k - 1];
    if (delta.den * d[k + 1] * d[k - 1] < delta.num * d[k] * d[k] - delta.den * lam * lam) {
      swap(k, kmax);
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
}

/// Exact check of size reduction (|mu| <= 1/2) and the Lovász condition.
template <std::size_t N, class Form>
bool is_lll_reduced(const std::vector<Vec<N>>& basis, const Form& ip, Delta delta = {}) {
  const std::size_t n = basis.size();
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> bstar(n);  // squared lengths of the Gram-Schmidt vectors
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class s = mpq_class(ip(basis[i], basis[j]));
      for (std::size_t k = 0; k < j; ++k) s -= mu[i][k] * mu[j][k] * bstar[k];
      mu[i][j] = s / bstar[j];
      if (abs(mu[i][j]) > mpq_class(1, 2)) return false;
    }
    mpq_class s = mpq_class(ip(basis[i], basis[i]));
    for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * bstar[k];
    bstar[i] = s;
    if (bstar[i] <= 0) return false;
  }
  const mpq_class dq(delta.num, delta.den);
  for (std::size_t k = 1; k < n; ++k) {
    if (bstar[k] < (dq - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) return false;
  }
  return true;
}

/**
 * Fincke-Pohst enumeration of all nonzero coefficient vectors x with
 * Q(sum x_k b_k) <= bound, up to sign (the first nonzero coefficient from the
 * top is positive). `visit(vector, coeffs)` returns true to stop early.
 * Returns the number of vectors visited.
 */
template <std::size_t N, class Form, class Visit>
std::size_t enumerate_short(const std::vector<Vec<N>>& basis, const Form& ip, const Int& bound, Visit&& visit) {
  const std::size_t n = basis.size();
  // Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
  std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) q[i][j] = mpq_class(ip(basis[i], basis[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw Error(ErrorCode::PrecisionExhausted, "Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
  }

  std::vector<Int> x(n, 0);
  std::size_t visited = 0;
  bool stop = false;
  const mpq_class total(bound);

  std::function<void(std::size_t, const mpq_class&)> descend = [&](std::size_t level, const mpq_class& remaining) {
    mpq_class center = 0;
    for (std::size_t j = level + 1; j < n; ++j) center -= q[level][j] * mpq_class(x[j]);
    // |x - center| <= sqrt(remaining / q_ii); widen by one to stay conservative
    mpq_class radius2 = remaining / q[level][level];
    Int r2 = radius2.get_num() / radius2.get_den() + 1;
    Int radius;
    mpz_sqrt(radius.get_mpz_t(), r2.get_mpz_t());
    radius += 1;
    Int c_floor = center.get_num() / center.get_den();
    if (center < 0 && c_floor * center.get_den() != center.get_num()) c_floor -= 1;
    Int lo = c_floor - radius, hi = c_floor + radius + 1;

    bool all_higher_zero = true;
    for (std::size_t j = level + 1; j < n; ++j) {
      if (x[j] != 0) all_higher_zero = false;
    }
    if (all_higher_zero && lo < 0) lo = 0;  // sign normalization

    for (Int v = lo; v <= hi && !stop; ++v) {
      mpq_class diff = mpq_class(v) - center;
      mpq_class term = q[level][level] * diff * diff;
      if (term > remaining) continue;
      x[level] = v;
      mpq_class rest = remaining - term;
      if (level == 0) {
        bool nonzero = false;
        for (const auto& c : x) {
          if (c != 0) nonzero = true;
        }
        if (!nonzero) continue;
        ++visited;
        if (visit(combine(basis, x), x)) stop = true;
      } else {
        descend(level - 1, rest);
      }
    }
    x[level] = 0;
  };
  descend(n - 1, total);
  return visited;
}

}  // namespace congruent::lattice
