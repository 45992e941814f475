#pragma once

/**
 * @file report.hpp
 * @brief Per-prime rows, their CSV / JSON encodings, and the parallel range
 * scan behind the command-line tool.
 */

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "congruent/criteria.hpp"

namespace congruent {

inline constexpr std::string_view kCsvHeader =
    "p,p_mod_16,chi_1pi,chi_alpha_delta,chi_zeta_alpha_delta,v_level,w_level,congruent_status";

struct ScanRow {
  Int p;
  unsigned p_mod_16 = 0;
  int chi_1pi = 0;
  int chi_alpha_delta = 0;
  int chi_zeta_alpha_delta = 0;
  int v_level = 0;
  std::optional<int> w_level;
  std::string congruent_status;
  bool failed = false;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

inline ScanRow make_row(const Classification& c) {
  ScanRow row;
  row.p = c.p.value();
  row.p_mod_16 = c.p.mod16();
  row.chi_1pi = c.symbols.chi_1pi;
  row.chi_alpha_delta = c.symbols.chi_V4;
  row.chi_zeta_alpha_delta = c.symbols.chi_W3;
  row.v_level = c.v_level;
  row.w_level = c.w_level;
  row.congruent_status = std::string(to_string(c.congruent_status));
  return row;
}

/// Row for a prime whose delta could not be certified; the scan continues.
inline ScanRow failed_row(const OddPrime& p) {
  ScanRow row;
  row.p = p.value();
  row.p_mod_16 = p.mod16();
  row.chi_1pi = chi_one_plus_i(p);
  row.v_level = v_level_from(p, {row.chi_1pi, 0, 0});
  row.w_level = w_level_from(p, {row.chi_1pi, 0, 0});
  row.congruent_status = std::string(to_string(ErrorCode::ComputeFailed));
  row.failed = true;
  return row;
}

inline std::string to_csv(const ScanRow& r) {
  std::ostringstream os;
  os << r.p.get_str() << ',' << r.p_mod_16 << ',' << r.chi_1pi << ',' << r.chi_alpha_delta << ','
     << r.chi_zeta_alpha_delta << ',' << r.v_level << ',' << (r.w_level ? std::to_string(*r.w_level) : "NA") << ','
     << r.congruent_status;
  return os.str();
}

/// JSON object for a row; p is a decimal string since it may exceed 64 bits.
inline nlohmann::ordered_json to_json(const ScanRow& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p.get_str();
  j["p_mod_16"] = r.p_mod_16;
  j["chi_1pi"] = r.chi_1pi;
  j["chi_alpha_delta"] = r.chi_alpha_delta;
  j["chi_zeta_alpha_delta"] = r.chi_zeta_alpha_delta;
  j["v_level"] = r.v_level;
  if (r.w_level) {
    j["w_level"] = *r.w_level;
  } else {
    j["w_level"] = nullptr;
  }
  j["congruent_status"] = r.congruent_status;
  return j;
}

inline nlohmann::ordered_json to_json(const Classification& c) {
  auto j = to_json(make_row(c));
  j["sha_report"] = std::string(to_string(c.sha_report));
  return j;
}

inline ScanRow row_from_json(const nlohmann::json& j) {
  ScanRow r;
  r.p = Int(j.at("p").get<std::string>());
  r.p_mod_16 = j.at("p_mod_16").get<unsigned>();
  r.chi_1pi = j.at("chi_1pi").get<int>();
  r.chi_alpha_delta = j.at("chi_alpha_delta").get<int>();
  r.chi_zeta_alpha_delta = j.at("chi_zeta_alpha_delta").get<int>();
  r.v_level = j.at("v_level").get<int>();
  if (!j.at("w_level").is_null()) r.w_level = j.at("w_level").get<int>();
  r.congruent_status = j.at("congruent_status").get<std::string>();
  r.failed = r.congruent_status == to_string(ErrorCode::ComputeFailed);
  return r;
}

inline ScanRow row_from_csv(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream ss(line);
  for (std::string item; std::getline(ss, item, ',');) f.push_back(item);
  if (f.size() != 8) throw Error(ErrorCode::PreconditionViolation, "malformed CSV row: " + line);
  ScanRow r;
  r.p = Int(f[0]);
  r.p_mod_16 = static_cast<unsigned>(std::stoul(f[1]));
  r.chi_1pi = std::stoi(f[2]);
  r.chi_alpha_delta = std::stoi(f[3]);
  r.chi_zeta_alpha_delta = std::stoi(f[4]);
  r.v_level = std::stoi(f[5]);
  if (f[6] != "NA") r.w_level = std::stoi(f[6]);
  r.congruent_status = f[7];
  r.failed = r.congruent_status == to_string(ErrorCode::ComputeFailed);
  return r;
}

/// Classify every odd prime in [from, to], one row per prime in ascending
/// order. The range is cut into `workers` contiguous blocks whose results
/// are concatenated, so the output does not depend on scheduling.
inline std::vector<ScanRow> scan_range(const Int& from, const Int& to, unsigned workers = 1) {
  if (from > to) throw Error(ErrorCode::PreconditionViolation, "scan range is empty (from > to)");
  workers = std::max(1u, workers);
  Int lo = from < 3 ? Int(3) : from;
  if (lo > to) return {};
  Int width = to - lo + 1;
  std::vector<std::vector<ScanRow>> blocks(workers);

  auto work = [&](unsigned w) {
    Int begin = lo + width * w / workers;
    Int end = lo + width * (w + 1) / workers;  // exclusive
    if (mpz_even_p(begin.get_mpz_t())) ++begin;
    for (Int n = begin; n < end; n += 2) {
      if (!is_probable_prime(n)) continue;
      OddPrime p(n);
      try {
        blocks[w].push_back(make_row(classify(p)));
      } catch (const Error&) {
        blocks[w].push_back(failed_row(p));
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  std::vector<ScanRow> rows;
  for (auto& b : blocks) {
    rows.insert(rows.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  }
  return rows;
}

struct ScanSummary {
  std::map<std::pair<int, int>, std::size_t> cells;  // (v_level, w_level or -1 for NA)
  std::size_t primes = 0;
  std::size_t failures = 0;
  std::size_t v3 = 0;  // v_level >= 3
  std::size_t v4 = 0;
  std::size_t w2 = 0;  // w_level >= 2
  std::size_t w3 = 0;

  double v4_over_v3() const { return v3 == 0 ? 0.0 : static_cast<double>(v4) / static_cast<double>(v3); }
  double w3_over_w2() const { return w2 == 0 ? 0.0 : static_cast<double>(w3) / static_cast<double>(w2); }
};

inline ScanSummary summarize(const std::vector<ScanRow>& rows) {
  ScanSummary s;
  for (const auto& r : rows) {
    ++s.primes;
    if (r.failed) ++s.failures;
    ++s.cells[{r.v_level, r.w_level.value_or(-1)}];
    if (r.v_level >= 3) ++s.v3;
    if (r.v_level >= 4) ++s.v4;
    if (r.w_level && *r.w_level >= 2) ++s.w2;
    if (r.w_level && *r.w_level >= 3) ++s.w3;
  }
  return s;
}

inline std::string format_summary(const ScanSummary& s) {
  std::ostringstream os;
  os << "primes: " << s.primes << '\n';
  if (s.failures) os << "compute failures: " << s.failures << '\n';
  os << "cells (v_level, w_level): count\n";
  for (const auto& [cell, n] : s.cells) {
    os << "  (" << cell.first << ", " << (cell.second < 0 ? std::string("NA") : std::to_string(cell.second))
       << "): " << n << '\n';
  }
  os << "|V(4)| / |V(3)| = " << s.v4 << " / " << s.v3 << " = " << s.v4_over_v3() << '\n';
  os << "|W(3)| / |W(2)| = " << s.w3 << " / " << s.w2 << " = " << s.w3_over_w2() << '\n';
  return os.str();
}

/// Level as printed in reports: the ceiling level is only a lower bound.
inline std::string level_text(int level, int ceiling) {
  return level >= ceiling ? "≥" + std::to_string(ceiling) : std::to_string(level);
}

inline std::string format_text(const Classification& c) {
  std::ostringstream os;
  os << "p                     " << c.p.value().get_str() << '\n';
  os << "p mod 16              " << c.p.mod16() << '\n';
  os << "v_level               " << level_text(c.v_level, kVLevelCeiling) << '\n';
  os << "w_level               " << (c.w_level ? level_text(*c.w_level, kWLevelCeiling) : std::string("NA")) << '\n';
  os << "(1+i/p)               " << c.symbols.chi_1pi << '\n';
  os << "(alpha delta/P)       " << c.symbols.chi_V4 << '\n';
  os << "(zeta alpha delta/P)  " << c.symbols.chi_W3 << '\n';
  os << "congruent_status      " << to_string(c.congruent_status) << '\n';
  os << "sha_report            " << to_string(c.sha_report) << '\n';
  if (c.delta) {
    os << "delta_p = a + b alpha, a^2 - (1+i) b^2 = p\n";
    os << "  a = " << c.delta->a << '\n';
    os << "  b = " << c.delta->b << '\n';
  }
  return os.str();
}

}  // namespace congruent
