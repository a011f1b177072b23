// nihopp: construct and check permutation polynomials
// (x^(2^m) + x + delta)^(i(2^m-1)+1) + x over GF(2^(2m)).
//
// Exit codes: 0 all checks pass, 1 a violation was found, 2 usage or
// configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "nihopp/nihopp.hpp"

namespace {

using namespace nihopp;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ResidueClass parse_class(const std::string& text) {
  if (text == "1" || text == "one") return ResidueClass::One;
  if (text == "2k" || text == "2^k" || text == "two-pow-k") return ResidueClass::TwoPowK;
  throw UsageError("--class must be 1 or 2^k");
}

Json solve_line(int m, int k, ResidueClass cls, bool override_k) {
  try {
    return to_json(construct_i(m, k, cls, override_k));
  } catch (const NoSolution& e) {
    const ConstructionParams p{m, k, cls, k <= m - 1};
    Json j;
    j["m"] = m;
    j["k"] = k;
    j["class"] = p.residue();
    j["i"] = nullptr;
    j["j"] = nullptr;
    j["s"] = nullptr;
    j["provenance"] = to_string(Provenance::Unproven);
    j["applicable"] = false;
    j["reason"] = e.what();
    return j;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Niho-exponent permutation polynomials over GF(2^(2m))"};
  app.require_subcommand(1);

  // field
  int field_n = 0;
  auto* field_cmd = app.add_subcommand("field", "Print the field representation used for GF(2^n)");
  field_cmd->add_option("--n", field_n, "Field degree n (2..32)")->required();

  // solve
  int solve_m = 0;
  std::optional<int> solve_k;
  std::optional<std::string> solve_class;
  bool solve_override = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve (2^k+1) i = c (mod 2^m+1) and report the witness");
  solve_cmd->add_option("--m", solve_m, "Half degree m")->required();
  solve_cmd->add_option("--k", solve_k, "k in [1, m-1]; all k when omitted");
  solve_cmd->add_option("--class", solve_class, "Residue class: 1 or 2^k; both when omitted");
  solve_cmd->add_flag("--allow-noncanonical", solve_override, "Permit k outside [1, m-1]");

  // verify
  int verify_m = 0;
  std::optional<u64> verify_i, verify_s;
  std::optional<std::string> verify_delta;
  bool verify_all = false, no_timing = false, summary_only = false;
  std::optional<std::size_t> sample_count;
  std::uint64_t sample_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check the permutation property");
  verify_cmd->add_option("--m", verify_m, "Half degree m (2m <= 16)")->required();
  auto* opt_i = verify_cmd->add_option("--i", verify_i, "Niho parameter i in [0, 2^m]");
  auto* opt_s = verify_cmd->add_option("--s", verify_s, "Raw exponent s >= 1");
  opt_i->excludes(opt_s);
  auto* opt_all = verify_cmd->add_flag("--all-deltas", verify_all, "Check every delta (2m <= 12)");
  auto* opt_sample = verify_cmd->add_option("--sample", sample_count, "Check this many seeded deltas");
  verify_cmd->add_option("--seed", sample_seed, "Seed for --sample")->needs(opt_sample);
  auto* opt_delta = verify_cmd->add_option("--delta", verify_delta, "Check a single delta (hex)");
  opt_all->excludes(opt_sample)->excludes(opt_delta);
  opt_sample->excludes(opt_delta);
  verify_cmd->add_flag("--no-timing", no_timing, "Write ms = 0 for byte-identical output");
  verify_cmd->add_flag("--summary-only", summary_only, "Only print the summary line");

  // table
  int table_min = 2, table_max = 8;
  std::string table_format = "json";
  std::optional<std::string> table_out;
  auto* table_cmd = app.add_subcommand("table", "Emit the machine-checked table of known parameters");
  table_cmd->add_option("--m-min", table_min, "Smallest m (>= 2)");
  table_cmd->add_option("--m-max", table_max, "Largest m (<= 20; only m <= 8 is verified)");
  table_cmd->add_option("--format", table_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  table_cmd->add_option("--output", table_out, "Write to this file instead of stdout");

  // prooflab
  std::string suite;
  int lab_m = 0;
  std::optional<int> lab_k;
  auto* lab_cmd = app.add_subcommand("prooflab", "Run a numerical check of a lemma or proof step");
  lab_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  lab_cmd->add_option("--m", lab_m, "Half degree m")->required();
  lab_cmd->add_option("--k", lab_k, "Restrict to this k");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (*field_cmd) {
    std::cout << to_json(Field::make(field_n)).dump() << "\n";
    return kExitOk;
  }

  if (*solve_cmd) {
    std::vector<int> ks;
    if (solve_k) {
      ks.push_back(*solve_k);
    } else {
      for (int k = 1; k <= solve_m - 1; ++k) ks.push_back(k);
    }
    std::vector<ResidueClass> classes{ResidueClass::One, ResidueClass::TwoPowK};
    if (solve_class) classes = {parse_class(*solve_class)};
    for (int k : ks) {
      for (auto cls : classes) std::cout << solve_line(solve_m, k, cls, solve_override).dump() << "\n";
    }
    return kExitOk;
  }

  if (*verify_cmd) {
    if (!verify_i && !verify_s) throw UsageError("verify needs --i or --s");
    if (2 * verify_m > kMaxExhaustiveDegree || verify_m < 1) {
      throw UsageError(fmt::format("verify needs 1 <= m <= {}", kMaxExhaustiveDegree / 2));
    }
    const Field F = Field::make(2 * verify_m);
    const u64 s = verify_i ? niho_exponent(verify_m, *verify_i).s : *verify_s;
    if (s < 1) throw UsageError("--s must be >= 1");
    VerificationSummary sum;
    if (verify_delta) {
      const Element d = parse_hex_element(*verify_delta);
      if (!F.contains(d)) throw UsageError("--delta outside the field");
      sum.m = verify_m;
      sum.i = verify_i.value_or(0);
      sum.s = s;
      sum.policy = DeltaPolicy::sample(1, 0);
      sum.reports.push_back(is_permutation_exhaustive(PPInstance(F, verify_m, d, s, verify_i)));
    } else {
      DeltaPolicy policy = DeltaPolicy::default_for(verify_m);
      if (verify_all) policy = DeltaPolicy::all();
      if (sample_count) policy = DeltaPolicy::sample(*sample_count, sample_seed);
      sum = verify_exponent(F, verify_m, s, verify_i, policy);
    }
    if (!summary_only) {
      for (const auto& r : sum.reports) std::cout << to_json(r, !no_timing).dump() << "\n";
    }
    Json line{{"summary", summary_json(sum)}};
    if (!verify_i) line["summary"]["i"] = nullptr;
    if (verify_delta) line["summary"]["delta_policy"] = "single";
    std::cout << line.dump() << "\n";
    return sum.all_pass() ? kExitOk : kExitViolation;
  }

  if (*table_cmd) {
    const auto rows = build_table(table_min, table_max);
    const std::string doc = table_format == "csv" ? emit_csv(rows) : emit_json_lines(rows);
    if (table_out) {
      std::ofstream f(*table_out, std::ios::binary);
      if (!f) throw UsageError("cannot open " + *table_out);
      f << doc;
    } else {
      std::cout << doc;
    }
    bool all = true;
    for (const auto& r : rows) all = all && (r.verified() || r.m > kMaxVerifiedM);
    return all ? kExitOk : kExitViolation;
  }

  if (*lab_cmd) {
    const auto summary = run_suite(suite, lab_m, lab_k);
    std::cout << to_json(summary).dump() << "\n";
    return summary.ok() ? kExitOk : kExitViolation;
  }

  if (*selftest_cmd) {
    return acceptance::run_all(std::cout) ? kExitOk : kExitViolation;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nihopp::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range, domain_error: bad parameters
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
