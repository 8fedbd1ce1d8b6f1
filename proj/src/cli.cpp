#include "triavg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "triavg/convergents.hpp"
#include "triavg/format.hpp"
#include "triavg/identities.hpp"
#include "triavg/recurrences.hpp"
#include "triavg/triangular.hpp"

namespace triavg {
namespace {

constexpr std::size_t kLargeOutputWarning = 1000000;
constexpr std::size_t kMaxFailuresShown = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenOptions {
  std::string sequence;
  std::size_t count = 10;
  std::string format = "plain";
  std::optional<std::string> k, w0, w1;
};

struct VerifyOptions {
  std::string suite = "all";
  std::size_t max_n = 64;
};

struct SolveOptions {
  std::string max_s;
};

struct WitnessOptions {
  std::string n;
};

BigInt parse_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_bigint(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
  }
}

std::string spec_text(const RecurrenceSpec& spec) {
  return "w(" + to_string(spec.k) + ", " + to_string(spec.w0) + ", " + to_string(spec.w1) + ")";
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.count < 1) throw UsageError("--count must be at least 1");
  const auto format = format_from_name(opt.format);
  if (!format) throw UsageError("unknown format '" + opt.format + "'");
  const bool custom = opt.sequence == "custom";
  if (!custom && (opt.k || opt.w0 || opt.w1)) {
    throw UsageError("--k/--w0/--w1 only apply to 'custom'");
  }
  if (opt.count > kLargeOutputWarning) {
    err << "warning: writing " << opt.count << " terms; output will be large\n";
  }

  std::vector<BigInt> terms;
  std::vector<std::string> header;
  if (opt.sequence == "z") {
    for (const auto& c : cf_sqrt3(opt.count)) terms.push_back(c.p);
    header = {"z(n): numerators of the continued fraction convergents to sqrt(3)",
              "offset 0"};
  } else if (custom) {
    if (!opt.k || !opt.w0 || !opt.w1) throw UsageError("custom requires --k, --w0 and --w1");
    RecurrenceSpec spec{parse_arg("--k", *opt.k), parse_arg("--w0", *opt.w0),
                        parse_arg("--w1", *opt.w1)};
    terms = sequence_prefix(spec, opt.count);
    header = {"custom " + spec_text(spec) + ": w_n = 4w_{n-1} - w_{n-2} + k", "offset 0"};
  } else if (auto id = named_from_letter(opt.sequence)) {
    terms = sequence_prefix(*id, opt.count);
    header = {std::string(letter(*id)) + "(n) = " + spec_text(spec_of(*id)), "offset 0"};
  } else {
    throw UsageError("unknown sequence '" + opt.sequence +
                     "' (expected one of a, b, u, v, L, F, z, custom)");
  }
  write_terms(out, terms, *format, header);
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  if (opt.max_n < 1) throw UsageError("--max-n must be at least 1");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), opt.suite) == names.end()) {
    throw UsageError("unknown suite '" + opt.suite + "'");
  }

  std::size_t failed_suites = 0;
  const auto reports = run_suite(opt.suite, opt.max_n);
  for (const auto& report : reports) {
    const std::string range =
        "n=" + std::to_string(report.first_n) + ".." + std::to_string(report.last_n);
    if (report.passed()) {
      out << "PASS " << report.identity_name << ' ' << range << '\n';
      continue;
    }
    ++failed_suites;
    out << "FAIL " << report.identity_name << ' ' << range
        << " failures=" << report.failures.size() << '\n';
    const std::size_t shown = std::min(report.failures.size(), kMaxFailuresShown);
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& f = report.failures[i];
      out << "  n=" << f.n << " [" << f.relation << "] lhs=" << to_string(f.lhs)
          << " rhs=" << to_string(f.rhs) << '\n';
    }
  }
  if (failed_suites == 0) {
    out << "all " << reports.size() << " checks passed\n";
    return kExitOk;
  }
  out << failed_suites << " of " << reports.size() << " checks failed\n";
  return kExitVerifyFailed;
}

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
  const BigInt s_max = parse_arg("--max-s", opt.max_s);
  if (s_max < 1) throw UsageError("--max-s must be at least 1");

  const auto solutions = enumerate_solutions(s_max);

  // The recurrence side of the comparison: (b_n, a_n) for n >= 1 with b_n <= s_max.
  std::vector<Solution> expected;
  for (std::size_t n = 1;; ++n) {
    BigInt b = eval_iterative(spec_of(Named::B), n);
    if (b > s_max) break;
    expected.push_back({std::move(b), eval_iterative(spec_of(Named::A), n)});
  }

  bool all_ok = solutions.size() == expected.size();
  out << "s r average check\n";
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const auto& sol = solutions[i];
    const Rat avg = prefix_average(sol.s);
    const bool avg_ok = avg.is_integer() && avg.num() == triangular(sol.r);
    const bool match = i < expected.size() && expected[i] == sol;
    out << to_string(sol.s) << ' ' << to_string(sol.r) << ' ' << to_string(avg) << ' ';
    if (avg_ok && match) {
      out << "OK(b_" << i + 1 << ",a_" << i + 1 << ")\n";
    } else {
      out << "MISMATCH\n";
      all_ok = false;
    }
  }
  if (!all_ok) {
    out << "scan found " << solutions.size() << " solutions, recurrences predict "
        << expected.size() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_witness(const WitnessOptions& opt, std::ostream& out) {
  const BigInt n_big = parse_arg("n", opt.n);
  if (n_big == 0) {
    throw UsageError("n must be at least 1: b_0 = -1 is not a valid prefix length");
  }
  if (n_big < 0 || !n_big.fits_ulong_p()) throw UsageError("n must be a positive integer");
  const auto w = witness(n_big.get_ui());
  out << "n=" << w.n << '\n'
      << "b=" << to_string(w.s) << '\n'
      << "sum=" << to_string(w.sum) << '\n'
      << "avg=" << to_string(w.avg) << '\n'
      << "a=" << to_string(w.r) << '\n'
      << "VERIFIED\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangular-number averages: sequences, identity checks, and witnesses",
               "triavg"};
  app.require_subcommand(1);

  std::string out_path;
  GenOptions gen;
  VerifyOptions verify;
  SolveOptions solve;
  WitnessOptions wit;

  auto* gen_cmd = app.add_subcommand("gen", "Print the first terms of a sequence");
  gen_cmd->add_option("sequence", gen.sequence, "a, b, u, v, L, F, z or custom")->required();
  gen_cmd->add_option("--count", gen.count, "Number of terms (from index 0)");
  gen_cmd->add_option("--format", gen.format, "bfile, csv, json or plain");
  gen_cmd->add_option("--k", gen.k, "custom: forcing constant k");
  gen_cmd->add_option("--w0", gen.w0, "custom: w_0");
  gen_cmd->add_option("--w1", gen.w1, "custom: w_1");
  gen_cmd->add_option("--out", out_path, "Write output to PATH instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Check the identities over 0..max-n");
  verify_cmd->add_option("--suite", verify.suite,
                         "all, lucas, discriminant, congruences, linkages, vsquare, "
                         "bisection, differences or convergents");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest index checked");
  verify_cmd->add_option("--out", out_path, "Write output to PATH instead of stdout");

  auto* solve_cmd =
      app.add_subcommand("solve", "Brute-force s^2 + 3s + 2 = 3r^2 + 3r for 1 <= s <= max-s");
  solve_cmd->add_option("--max-s", solve.max_s, "Largest s scanned")->required();
  solve_cmd->add_option("--out", out_path, "Write output to PATH instead of stdout");

  auto* witness_cmd =
      app.add_subcommand("witness", "Verify that the average of T_1..T_{b_n} is T_{a_n}");
  witness_cmd->add_option("n", wit.n, "Index n >= 1")->required();
  witness_cmd->add_option("--out", out_path, "Write output to PATH instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (gen_cmd->parsed()) status = cmd_gen(gen, buffer, err);
    else if (verify_cmd->parsed()) status = cmd_verify(verify, buffer);
    else if (solve_cmd->parsed()) status = cmd_solve(solve, buffer);
    else if (witness_cmd->parsed()) status = cmd_witness(wit, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace triavg
