#pragma once

/**
 * @file criteria.hpp
 * @brief V-level (2-power dividing h(-4p)) and W-level (2-divisibility of
 * the distinguished Sha classes of y^2 = x^3 - p^2 x) of an odd prime.
 *
 *   v_level: 0  p ≡ 3 (4)
 *            1  p ≡ 5 (8)
 *            2  p ≡ 1 (8), (1+i/p) = -1
 *            3  (1+i/p) = +1, (alpha delta_p / P) = -1
 *            4  (1+i/p) = +1, (alpha delta_p / P) = +1   (at least 4)
 *
 *   w_level: NA for p !≡ 1 (8); otherwise 1, 2, 3 with (zeta alpha delta_p / P)
 *            in place of (alpha delta_p / P). 3 means "at least 3".
 *
 * P is any prime above p with delta_p not in P; the symbols do not depend
 * on that choice nor on the choice of delta_p or zeta.
 */

#include <optional>
#include <string>
#include <string_view>

#include "congruent/modmath.hpp"
#include "congruent/quartic.hpp"

namespace congruent {

/// 0 encodes "not applicable".
struct SymbolSet {
  int chi_1pi = 0;
  int chi_V4 = 0;
  int chi_W3 = 0;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;
};

enum class CongruentStatus { CongruentMonsky, NotCongruent, Undecided };
enum class ShaReport { Sha2TrivialKnown, ShaZ2xZ2, ShaZ4xZ4, Unknown };

inline std::string_view to_string(CongruentStatus s) {
  switch (s) {
    case CongruentStatus::CongruentMonsky: return "CONGRUENT_MONSKY";
    case CongruentStatus::NotCongruent: return "NOT_CONGRUENT";
    case CongruentStatus::Undecided: return "UNDECIDED";
  }
  return "?";
}

inline std::string_view to_string(ShaReport s) {
  switch (s) {
    case ShaReport::Sha2TrivialKnown: return "SHA2_TRIVIAL_KNOWN";
    case ShaReport::ShaZ2xZ2: return "SHA_Z2xZ2";
    case ShaReport::ShaZ4xZ4: return "SHA_Z4xZ4";
    case ShaReport::Unknown: return "UNKNOWN";
  }
  return "?";
}

inline constexpr int kVLevelCeiling = 4;
inline constexpr int kWLevelCeiling = 3;

/// (1+i'/p) for p ≡ 1 mod 8, where it does not depend on the choice of i'; else 0.
inline int chi_one_plus_i(const OddPrime& p) {
  if (p.mod8() != 1) return 0;
  return legendre(1 + sqrt_minus_one(p), p);
}

/// A prime above p at which delta does not vanish (first in primes_above order).
inline PrimeAboveP admissible_prime(const DeltaSolution& delta, const OddPrime& p) {
  for (auto& prime : primes_above(p)) {
    if (embed(delta.delta, prime) != 0) return prime;
  }
  throw Error(ErrorCode::ComputeFailed, "delta vanishes at every prime above p");
}

/// (alpha delta / P), with P given by its root.
inline int alpha_delta_symbol(const QuarticInt& delta, const PrimeAboveP& at) {
  return legendre(at.r * embed(delta, at), at.p);
}

/// (zeta alpha delta / P) for a primitive eighth root zeta (mod p).
inline int zeta_alpha_delta_symbol(const QuarticInt& delta, const PrimeAboveP& at, const Int& zeta) {
  return legendre(zeta * at.r * embed(delta, at), at.p);
}

/// Symbols together with the delta_p they were computed from (if any).
struct SymbolEvaluation {
  SymbolSet symbols;
  std::optional<DeltaSolution> delta;
};

inline SymbolEvaluation evaluate_symbols(const OddPrime& p) {
  SymbolEvaluation out;
  out.symbols.chi_1pi = chi_one_plus_i(p);
  if (out.symbols.chi_1pi != 1) return out;
  try {
    out.delta = solve_delta(p);
    PrimeAboveP at = admissible_prime(*out.delta, p);
    out.symbols.chi_V4 = alpha_delta_symbol(out.delta->delta, at);
    out.symbols.chi_W3 = zeta_alpha_delta_symbol(out.delta->delta, at, eighth_root_of_unity(p));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ComputeFailed) throw;
    throw Error(ErrorCode::ComputeFailed, std::string("delta_p could not be certified: ") + e.what());
  }
  return out;
}

inline int v_level_from(const OddPrime& p, const SymbolSet& s) {
  if (p.mod4() == 3) return 0;
  if (p.mod8() == 5) return 1;
  if (s.chi_1pi != 1) return 2;
  return s.chi_V4 == 1 ? 4 : 3;
}

inline std::optional<int> w_level_from(const OddPrime& p, const SymbolSet& s) {
  if (p.mod8() != 1) return std::nullopt;
  if (s.chi_1pi != 1) return 1;
  return s.chi_W3 == 1 ? 3 : 2;
}

inline std::pair<int, SymbolSet> v_level(const OddPrime& p) {
  auto eval = evaluate_symbols(p);
  return {v_level_from(p, eval.symbols), eval.symbols};
}

inline std::pair<std::optional<int>, SymbolSet> w_level(const OddPrime& p) {
  auto eval = evaluate_symbols(p);
  return {w_level_from(p, eval.symbols), eval.symbols};
}

struct Classification {
  OddPrime p;
  int v_level = 0;
  std::optional<int> w_level;
  SymbolSet symbols;
  CongruentStatus congruent_status = CongruentStatus::Undecided;
  ShaReport sha_report = ShaReport::Unknown;
  std::optional<DeltaSolution> delta;
};

inline Classification classify_from(const OddPrime& p, SymbolEvaluation eval) {
  Classification c{p, 0, std::nullopt, {}, CongruentStatus::Undecided, ShaReport::Unknown, std::nullopt};
  c.symbols = eval.symbols;
  c.delta = std::move(eval.delta);
  c.v_level = v_level_from(p, c.symbols);
  c.w_level = w_level_from(p, c.symbols);
  switch (p.mod8()) {
    case 3:
      c.congruent_status = CongruentStatus::NotCongruent;
      c.sha_report = ShaReport::Sha2TrivialKnown;
      break;
    case 5:
    case 7:
      c.congruent_status = CongruentStatus::CongruentMonsky;
      c.sha_report = ShaReport::Sha2TrivialKnown;
      break;
    default:
      if (*c.w_level == 1) {
        c.congruent_status = CongruentStatus::NotCongruent;
        c.sha_report = ShaReport::ShaZ2xZ2;
      } else if (*c.w_level == 2) {
        c.congruent_status = CongruentStatus::NotCongruent;
        c.sha_report = ShaReport::ShaZ4xZ4;
      } else {
        c.congruent_status = CongruentStatus::Undecided;
        c.sha_report = ShaReport::Unknown;
      }
  }
  return c;
}

inline Classification classify(const OddPrime& p) { return classify_from(p, evaluate_symbols(p)); }

}  // namespace congruent
