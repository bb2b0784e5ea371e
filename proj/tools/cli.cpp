#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "qhb/bacon_shor.hpp"
#include "qhb/bounds.hpp"
#include "qhb/distance.hpp"
#include "qhb/families.hpp"
#include "qhb/proof_chain.hpp"
#include "report.hpp"

namespace qhb::cli {

namespace {

/// Raised for invalid input after CLI parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw UsageError(std::string(what) + ": expected a nonnegative integer, got \"" +
                     std::string(text) + "\"");
  }
  return v;
}

// "L..U" or a single "N".
Range parse_range(const std::string& text, std::string_view what) {
  Range r;
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    r.lo = r.hi = parse_uint(text, what);
  } else {
    r.lo = parse_uint(std::string_view(text).substr(0, sep), what);
    r.hi = parse_uint(std::string_view(text).substr(sep + 2), what);
  }
  if (r.lo < 1) throw UsageError(std::string(what) + ": range bounds must be positive");
  if (r.lo > r.hi) throw UsageError(std::string(what) + ": lower bound exceeds upper bound");
  return r;
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    return parse_uint(env, kBudgetEnv);
  }
  return kDefaultBudget;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::uint64_t n = 0, k = 0, r = 0, d = 0;
  bool json = false;
  bool assert_holds = false;
  bool assert_violates = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const CodeParams p{args.n, args.k, args.r, args.d};
  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const BoundReport hamming = hamming_check(p);
  const BoundReport singleton = singleton_check(p);

  if (args.json) {
    Json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["r"] = p.r;
    j["d"] = p.d;
    j["hamming"] = to_json(hamming);
    j["singleton"] = to_json(singleton);
    out << j.dump(2) << '\n';
  } else {
    out << to_string(p) << '\n';
    Table table({"bound", "lhs", "rhs", "verdict", "margin_bits", "note"});
    auto row = [&](const BoundReport& rep, const std::string& relation) {
      table.add_row({std::string(to_string(rep.bound)), abbreviate(rep.lhs), abbreviate(rep.rhs),
                     rep.satisfied ? "holds" : "VIOLATED", format_margin(rep.margin_bits),
                     rep.note.empty() ? relation : relation + "; " + rep.note});
    };
    row(hamming, "2^(n-k-r) >= sum_{j<=t} C(n,j) 3^j");
    row(singleton, "n-2(d-1) >= k+r");
    table.print(out);
  }

  if (args.assert_holds && !hamming.satisfied) return kAssertionFailed;
  if (args.assert_violates && hamming.satisfied) return kAssertionFailed;
  return kOk;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::string family;
  std::string a, b, t;
  bool json = false;
  bool csv = false;
  bool violations_only = false;
};

std::vector<ScanRecord> collect_scan(const ScanArgs& args) {
  std::vector<ScanRecord> records;
  auto keep = [&](ScanRecord rec) {
    if (!args.violations_only || !rec.hamming.satisfied) records.push_back(std::move(rec));
  };
  auto need = [](const std::string& value, const char* flag, const std::string& family) {
    if (value.empty()) throw UsageError("scan " + family + " requires " + flag);
  };

  if (args.family == "square") {
    need(args.a, "--a", args.family);
    const Range a = parse_range(args.a, "--a");
    for (auto i = a.lo; i <= a.hi; ++i) keep(make_record("square", i, i, std::nullopt, square_family(i)));
  } else if (args.family == "rect") {
    need(args.a, "--a", args.family);
    need(args.b, "--b", args.family);
    const Range a = parse_range(args.a, "--a");
    const Range b = parse_range(args.b, "--b");
    for (auto i = a.lo; i <= a.hi; ++i) {
      for (auto j = b.lo; j <= b.hi; ++j) keep(make_record("rect", i, j, std::nullopt, rect_family(i, j)));
    }
  } else {
    need(args.t, "--t", args.family);
    const Range t = parse_range(args.t, "--t");
    for (auto i = t.lo; i <= t.hi; ++i) keep(make_record("odd", 2 * i + 1, 2 * i + 1, i, odd_family(i)));
  }
  return records;
}

int cmd_scan(const ScanArgs& args, std::ostream& out) {
  if (args.json && args.csv) throw UsageError("--json and --csv are mutually exclusive");
  const auto records = collect_scan(args);
  if (args.json) {
    print_scan_json(out, records);
  } else if (args.csv) {
    print_scan_csv(out, records);
  } else {
    print_scan_table(out, records);
  }
  return kOk;
}

// ---------------------------------------------------------------- proof

struct ProofArgs {
  std::uint64_t t_max = 0;
  bool json = false;
  std::size_t workers = 1;
};

int cmd_proof(const ProofArgs& args, std::ostream& out) {
  if (args.t_max < 1) throw UsageError("--t-max must be at least 1");
  const auto rows = verify_chain(args.t_max, args.workers);
  bool ok = true;
  for (const auto& row : rows) ok = ok && row.all_ok() && row.implications_hold();
  const bool increasing = margins_strictly_increasing(rows);

  if (args.json) {
    Json j;
    j["t_max"] = args.t_max;
    j["all_ok"] = ok;
    j["margins_strictly_increasing"] = increasing;
    Json list = Json::array();
    for (const auto& row : rows) list.push_back(to_json(row));
    j["rows"] = std::move(list);
    out << j.dump(2) << '\n';
  } else {
    Table table({"t", "n", "quadratic", "power", "binomial", "suffices", "violation", "margin_bits"});
    auto flag = [](bool v) { return std::string(v ? "ok" : "FAIL"); };
    for (const auto& row : rows) {
      const auto side = 2 * row.t + 1;
      table.add_row({std::to_string(row.t), std::to_string(side * side), flag(row.quadratic_ok),
                     flag(row.power_ok), flag(row.binomial_ok), flag(row.suffices_ok),
                     flag(row.full_violation_ok), format_margin(row.margin_bits)});
    }
    table.print(out);
    out << (ok ? "all " + std::to_string(rows.size()) + " rows verified" : std::string("FAILED"))
        << "; Hamming margin " << (increasing ? "strictly increasing" : "NOT strictly increasing")
        << " in t\n";
  }
  return ok ? kOk : kAssertionFailed;
}

// ---------------------------------------------------------------- code

struct CodeArgs {
  std::uint64_t a = 0, b = 0;
  bool distance = false;
  std::optional<std::uint64_t> max_weight;
  std::optional<std::uint64_t> budget;
  std::size_t workers = 1;
  bool json = false;
};

int cmd_code(const CodeArgs& args, std::ostream& out, std::ostream& err) {
  if (args.a < 1 || args.b < 1) throw UsageError("lattice dimensions must be positive");
  const std::uint64_t budget = resolve_budget(args.budget);
  const SubsystemCode code = build_bacon_shor(args.a, args.b);
  const CodeParams family = rect_family(args.a, args.b);
  const bool certified = certify_parameters(code);

  Json j = to_json(code);
  j["family"] = {{"n", family.n}, {"k", family.k}, {"r", family.r}, {"d", family.d}};
  j["certified"] = certified;

  if (!args.json) {
    out << "Bacon-Shor code on a " << code.a << " x " << code.b << " lattice\n"
        << "  n = " << code.n << ", k = " << code.k << ", r = " << code.r << ", s = " << code.s << '\n'
        << "  family parameters " << to_string(family) << '\n'
        << "  certified: " << (certified ? "yes" : "NO") << '\n'
        << "  gauge generators (" << code.gauge.size() << "):\n";
    for (const auto& g : code.gauge) out << "    " << g.to_string() << '\n';
    out << "  stabilizer generators (" << code.stabilizer.size() << "):\n";
    for (const auto& g : code.stabilizer) out << "    " << g.to_string() << '\n';
  }

  auto finish = [&](int status) {
    if (args.json) out << j.dump(2) << '\n';
    return status;
  };

  if (!certified) {
    err << "certification failed for " << code.a << "x" << code.b << '\n';
    return finish(kAssertionFailed);
  }
  if (!args.distance) return finish(kOk);

  const std::uint64_t max_weight = args.max_weight.value_or(family.d);
  if (max_weight < 1 || max_weight > code.n) {
    throw UsageError("--max-weight must be between 1 and n = " + std::to_string(code.n));
  }
  const SearchOptions options{budget, args.workers};
  Json dist;
  dist["max_weight"] = max_weight;
  dist["budget"] = std::to_string(budget);
  try {
    const DistanceResult result = min_distance(code, max_weight, options);
    const bool matches = !result.truncated && result.d == family.d;
    dist["d"] = result.d;
    dist["truncated"] = result.truncated;
    dist["witness"] = result.truncated ? Json(nullptr) : Json(result.witness.to_string());
    dist["enumerated"] = std::to_string(result.enumerated);
    dist["matches_family"] = matches;

    const std::size_t d_for_purity = result.truncated ? family.d : result.d;
    const auto gauge_witness = low_weight_gauge_element(code, d_for_purity, options);
    dist["purity"] = gauge_witness ? "impure" : "pure";
    dist["purity_witness"] = gauge_witness ? Json(gauge_witness->to_string()) : Json(nullptr);
    const auto stab_weight = min_stabilizer_weight(code, options);
    dist["min_stabilizer_weight"] = stab_weight ? Json(*stab_weight) : Json(nullptr);
    j["distance"] = dist;

    if (!args.json) {
      if (result.truncated) {
        out << "  distance: > " << max_weight << " (search truncated after " << result.enumerated
            << " candidates)\n";
      } else {
        out << "  distance: " << result.d << " (witness " << result.witness.to_string() << ", "
            << result.enumerated << " candidates)\n";
      }
      out << "  matches family d = " << family.d << ": " << (matches ? "yes" : "NO") << '\n'
          << "  purity: " << (gauge_witness ? "impure" : "pure");
      if (gauge_witness) {
        out << " (gauge element " << gauge_witness->to_string() << " of weight "
            << weight(*gauge_witness) << ")";
      }
      out << '\n' << "  min stabilizer weight: "
          << (stab_weight ? std::to_string(*stab_weight) : std::string("-")) << '\n';
    }
    if (!matches) {
      err << "distance mismatch: expected " << family.d << '\n';
      return finish(kAssertionFailed);
    }
    return finish(kOk);
  } catch (const WorkloadRefused& e) {
    dist["refused"] = true;
    dist["workload"] = e.estimate().get_str(10);
    j["distance"] = dist;
    if (!args.json) {
      out << "  distance: refused, workload " << e.estimate().get_str(10) << " exceeds budget "
          << budget << '\n';
    }
    err << "brute-force search refused: workload " << e.estimate().get_str(10)
        << " exceeds budget " << budget << '\n';
    return finish(kResourceRefused);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hamming and Singleton bound checks for subsystem codes, with "
               "brute-force certification of Bacon-Shor codes",
               "qhb"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate both bounds for [[n,k,r,d]]");
  check_cmd->add_option("n", check.n, "physical qubits")->required();
  check_cmd->add_option("k", check.k, "logical qubits")->required();
  check_cmd->add_option("r", check.r, "gauge qubits")->required();
  check_cmd->add_option("d", check.d, "minimum distance")->required();
  check_cmd->add_flag("--json", check.json, "JSON output");
  auto* holds = check_cmd->add_flag("--assert-holds", check.assert_holds,
                                    "exit 2 unless the Hamming bound holds");
  check_cmd->add_flag("--assert-violates", check.assert_violates,
                      "exit 2 unless the Hamming bound is violated")
      ->excludes(holds);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Check every member of a code family");
  scan_cmd->add_option("family", scan.family, "square | rect | odd")
      ->required()
      ->check(CLI::IsMember({"square", "rect", "odd"}));
  scan_cmd->add_option("--a", scan.a, "row range L..U (square, rect)");
  scan_cmd->add_option("--b", scan.b, "column range L..U (rect)");
  scan_cmd->add_option("--t", scan.t, "index range L..U (odd)");
  scan_cmd->add_flag("--json", scan.json, "JSON output");
  scan_cmd->add_flag("--csv", scan.csv, "CSV output");
  scan_cmd->add_flag("--violations-only", scan.violations_only,
                     "only members violating the Hamming bound");

  ProofArgs proof;
  auto* proof_cmd = app.add_subcommand("proof", "Verify the odd-family violation chain for t = 1..t_max");
  proof_cmd->add_option("--t-max", proof.t_max, "largest t")->required();
  proof_cmd->add_flag("--json", proof.json, "JSON output");
  proof_cmd->add_option("--workers", proof.workers, "threads (0 = all cores)");

  CodeArgs code;
  auto* code_cmd = app.add_subcommand("code", "Build and certify the a x b Bacon-Shor code");
  code_cmd->add_option("a", code.a, "rows")->required();
  code_cmd->add_option("b", code.b, "columns")->required();
  code_cmd->add_flag("--distance", code.distance, "brute-force distance and purity");
  code_cmd->add_option("--max-weight", code.max_weight, "search up to this weight (default min(a,b))");
  code_cmd->add_option("--budget", code.budget,
                       std::string("candidate budget (default ") + std::to_string(kDefaultBudget) +
                           ", or $" + kBudgetEnv + ")");
  code_cmd->add_option("--workers", code.workers, "threads (0 = all cores)");
  code_cmd->add_flag("--json", code.json, "JSON output");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check, out);
    if (scan_cmd->parsed()) return cmd_scan(scan, out);
    if (proof_cmd->parsed()) return cmd_proof(proof, out);
    if (code_cmd->parsed()) return cmd_code(code, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qhb::cli
