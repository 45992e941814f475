// Command-line front end: classify, scan, verify, density, paper-check.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "congruent/congruent.hpp"

namespace {

using namespace congruent;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCompute = 2;
constexpr int kExitMismatch = 3;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::PreconditionViolation:
    case ErrorCode::BoundExceeded:
      return kExitUsage;
    default:
      return kExitCompute;
  }
}

std::optional<Int> parse_or_report(const std::string& text, const char* what) {
  auto n = parse_integer(text);
  if (!n) std::cerr << "error: " << what << " '" << text << "' is not an integer\n";
  return n;
}

int cmd_classify(const std::string& text, const std::string& format) {
  auto n = parse_or_report(text, "p");
  if (!n) return kExitUsage;
  if (*n <= 0 || !is_probable_prime(*n) || *n == 2) {
    std::cerr << "error: p = " << text << " is not an odd prime\n";
    return kExitUsage;
  }
  auto c = classify(OddPrime(*n));
  if (format == "json") {
    std::cout << to_json(c).dump() << '\n';
  } else {
    std::cout << format_text(c);
  }
  return kExitOk;
}

struct RangeArgs {
  std::string from, to;
  unsigned workers = 1;
};

std::optional<std::pair<Int, Int>> parse_range(const RangeArgs& args) {
  auto from = parse_or_report(args.from, "--from");
  auto to = parse_or_report(args.to, "--to");
  if (!from || !to) return std::nullopt;
  if (*from > *to) {
    std::cerr << "error: --from must not exceed --to\n";
    return std::nullopt;
  }
  return std::make_pair(*from, *to);
}

int cmd_scan(const RangeArgs& args, const std::string& out_path, const std::string& format) {
  auto range = parse_range(args);
  if (!range) return kExitUsage;
  auto rows = scan_range(range->first, range->second, args.workers);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (format == "csv") out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    if (format == "csv") {
      out << to_csv(row) << '\n';
    } else {
      out << to_json(row).dump() << '\n';
    }
  }
  out.flush();

  auto summary = summarize(rows);
  (out_path.empty() ? std::cerr : std::cout) << format_summary(summary);
  if (summary.failures) {
    for (const auto& row : rows) {
      if (row.failed) std::cerr << "COMPUTE_FAILED at p = " << row.p.get_str() << '\n';
    }
    return kExitCompute;
  }
  return kExitOk;
}

int cmd_density(const RangeArgs& args) {
  auto range = parse_range(args);
  if (!range) return kExitUsage;
  auto rows = scan_range(range->first, range->second, args.workers);
  auto summary = summarize(rows);
  std::cout << "range [" << range->first.get_str() << ", " << range->second.get_str() << "]\n";
  std::cout << format_summary(summary);
  return summary.failures ? kExitCompute : kExitOk;
}

int cmd_verify(const std::string& suite, std::int64_t limit, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  auto result = verify::run_suite(suite, limit, seed);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "suite " << suite << ", limit " << limit << ": " << result.checked << " cases checked in " << secs
            << " s\n";
  for (const auto& note : result.notes) std::cout << note << '\n';
  if (!result.pass) {
    std::cout << "FAIL first counterexample: " << result.counterexample << '\n';
    return kExitMismatch;
  }
  std::cout << "pass\n";
  return kExitOk;
}

void print_line(const char* label, const std::optional<Classification>& c) {
  std::cout << label;
  if (!c) {
    std::cout << "not found\n";
    return;
  }
  Int offset = c->p.value() - verify::ten_to_200();
  std::cout << "10^200+" << offset.get_str() << "  v_level " << level_text(c->v_level, kVLevelCeiling)
            << ", w_level " << level_text(*c->w_level, kWLevelCeiling) << ", " << to_string(c->congruent_status)
            << '\n';
}

int cmd_paper_check() {
  auto start = std::chrono::steady_clock::now();
  auto check = verify::paper_check();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "primes scanned past 10^200: " << check.primes_scanned << '\n';
  print_line("first (v 3, w 2): ", check.first_v3_w2);
  print_line("first (v 4, w 2): ", check.first_v4_w2);
  auto c41 = classify(OddPrime(41UL));
  std::cout << "p = 41: v_level " << level_text(c41.v_level, kVLevelCeiling) << ", w_level "
            << level_text(*c41.w_level, kWLevelCeiling) << ", (zeta alpha delta/P) = " << c41.symbols.chi_W3 << '\n';
  std::cout << "elapsed " << secs << " s\n";
  if (!check.result.pass) {
    std::cout << "FAIL " << check.result.counterexample << '\n';
    return kExitMismatch;
  }
  std::cout << "pass\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify primes by the 2-parts of h(-4p) and of Sha(y^2 = x^3 - p^2 x)"};
  app.require_subcommand(1);

  std::string p_text, format = "text";
  auto* classify_cmd = app.add_subcommand("classify", "Classify a single odd prime");
  classify_cmd->add_option("p", p_text, "An odd prime")->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  RangeArgs range;
  std::string out_path, scan_format = "csv";
  auto* scan_cmd = app.add_subcommand("scan", "Classify every odd prime in a range");
  scan_cmd->add_option("--from", range.from)->required();
  scan_cmd->add_option("--to", range.to)->required();
  scan_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");
  scan_cmd->add_option("--format", scan_format)->check(CLI::IsMember({"csv", "jsonl"}));
  scan_cmd->add_option("--workers", range.workers)->check(CLI::Range(1u, 1024u));

  std::string suite;
  std::int64_t limit = 20000;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite against the oracles");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--limit", limit, "Prime bound, or instance count for lemmas")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed);

  auto* density_cmd = app.add_subcommand("density", "Level counts and fractions over a range");
  density_cmd->add_option("--from", range.from)->required();
  density_cmd->add_option("--to", range.to)->required();
  density_cmd->add_option("--workers", range.workers)->check(CLI::Range(1u, 1024u));

  auto* paper_cmd = app.add_subcommand("paper-check", "Reproduce the 10^200 examples and the p = 41 check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(p_text, format);
    if (*scan_cmd) return cmd_scan(range, out_path, scan_format);
    if (*verify_cmd) return cmd_verify(suite, limit, seed);
    if (*density_cmd) return cmd_density(range);
    if (*paper_cmd) return cmd_paper_check();
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}
