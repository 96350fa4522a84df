#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "isolation/bounds.hpp"
#include "isolation/constructions.hpp"
#include "isolation/enumerate.hpp"
#include "isolation/errors.hpp"
#include "isolation/family.hpp"
#include "isolation/graph6.hpp"
#include "isolation/prover.hpp"
#include "isolation/verify.hpp"

using namespace isolab;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kParse = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int n_min = 1;
  int n_max = 8;
  std::string source = "builtin";
  std::string family = "e2";
  int jobs = 1;
  std::string json;
  std::string csv;
  std::optional<int> budget;
  bool strict_parse = false;
};

int default_jobs() {
  const char* env = std::getenv("ISOLATION_LAB_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) {
    throw UsageError(std::string("ISOLATION_LAB_JOBS must be a positive integer, got '") + env +
                     "'");
  }
  return static_cast<int>(v);
}

Theorem theorem_for(const std::string& family) {
  if (family == "e1") return Theorem::K1;
  if (family == "e2") return Theorem::K2;
  if (family == "e3") return Theorem::K3;
  if (family == "cycles") return Theorem::Cycles;
  throw UsageError("this command needs --family e1, e2, e3 or cycles, got '" + family + "'");
}

EnumSpec enum_spec(const Common& c) {
  if (c.n_min > c.n_max) throw UsageError("--n-min is larger than --n-max");
  EnumSpec spec;
  spec.n_min = c.n_min;
  spec.n_max = c.n_max;
  spec.source = parse_source(c.source);
  spec.strict_parse = c.strict_parse;
  return spec;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  return out;
}

int cmd_sweep(const Common& c, bool no_prover) {
  SweepOptions opts;
  opts.theorem = theorem_for(c.family);
  opts.source = enum_spec(c);
  opts.jobs = c.jobs;
  opts.budget = c.budget;
  opts.with_prover = !no_prover;

  std::optional<std::ofstream> json, csv;
  if (!c.json.empty()) json = open_out(c.json);
  if (!c.csv.empty()) {
    csv = open_out(c.csv);
    write_csv_header(*csv);
  }
  const SweepReport r = run_sweep(opts, [&](const VerificationRecord& rec) {
    if (json) *json << record_json(rec) << '\n';
    if (csv) write_csv_row(*csv, rec);
  });

  std::cout << "sweep " << theorem_name(r.theorem) << " n=" << r.n_min << ".." << r.n_max
            << " source=" << c.source << " jobs=" << c.jobs << '\n';
  std::cout << "checked     " << r.checked << '\n';
  std::cout << "exceptions  " << r.exceptions.size() << '\n';
  for (const ExceptionHit& e : r.exceptions) {
    std::cout << "  " << std::left << std::setw(12) << e.graph6 << e.which.describe() << '\n';
  }
  std::cout << "tight       " << r.tight << '\n';
  std::cout << "skipped     " << r.skipped << (r.skipped ? " (budget)" : "") << '\n';
  std::cout << "violations  " << r.violations.size() << '\n';
  for (const std::string& v : r.violations) std::cout << "  " << v << '\n';
  std::cout << "errors      " << r.errors.size() << '\n';
  for (const std::string& e : r.errors) std::cout << "  " << e << '\n';
  if (!r.case_counts.empty()) {
    std::cout << "cases\n";
    for (const auto& [label, count] : r.case_counts) {
      std::cout << "  " << std::left << std::setw(32) << label << count << '\n';
    }
  }
  for (const ParseIssue& p : r.parse_issues) {
    std::cerr << "skipped line " << p.line << ": " << p.message << '\n';
  }
  std::cout << "time        " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
  return r.ok() ? kOk : kViolation;
}

int cmd_ckn(const Common& c) {
  const Theorem t = theorem_for(c.family);
  if (t == Theorem::Cycles) throw UsageError("ckn is defined for e1, e2 and e3");
  const int k = t == Theorem::K1 ? 1 : t == Theorem::K2 ? 2 : 3;
  const EnumSpec spec = enum_spec(c);
  const bool builtin = std::holds_alternative<BuiltinSource>(spec.source);
  std::optional<std::ofstream> json;
  if (!c.json.empty()) json = open_out(c.json);
  bool all_match = true;
  std::cout << "k  n  c_kn   iota  formula  witness\n";
  for (int n = c.n_min; n <= c.n_max; ++n) {
    const CknRow row = ckn_row(k, n, spec.source);
    const Ratio f = ckn_formula(k, n);
    all_match = all_match && (!builtin || f == row.c);
    std::cout << k << "  " << n << "  " << std::left << std::setw(7) << row.c.to_string()
              << std::setw(6) << row.iota << std::setw(9) << f.to_string() << row.witness
              << '\n';
    if (json) {
      nlohmann::ordered_json j{{"k", k},         {"n", n},
                               {"c", row.c.to_string()}, {"iota", row.iota},
                               {"formula", f.to_string()}, {"witness", row.witness}};
      *json << j.dump() << '\n';
    }
  }
  return all_match ? kOk : kViolation;
}

int cmd_extremal(const Common& c, const std::string& construction) {
  std::optional<std::ofstream> json;
  if (!c.json.empty()) json = open_out(c.json);
  bool ok = true;
  std::cout << "construction  param  n   k  expected  iota  ok\n";
  for (const ExtremalRow& r : extremal_rows(construction)) {
    ok = ok && r.ok;
    std::cout << std::left << std::setw(14) << r.construction << std::setw(7) << r.param
              << std::setw(4) << r.n << std::setw(3) << r.k << std::setw(10) << r.expected
              << std::setw(6) << (r.iota ? std::to_string(*r.iota) : "over") << (r.ok ? "yes" : "NO")
              << '\n';
    if (json) {
      nlohmann::ordered_json j{{"construction", r.construction}, {"param", r.param},
                               {"n", r.n},
                               {"k", r.k},
                               {"graph6", r.graph6},
                               {"expected", r.expected},
                               {"iota", r.iota ? nlohmann::ordered_json(*r.iota) : nlohmann::ordered_json(nullptr)},
                               {"ok", r.ok}};
      *json << j.dump() << '\n';
    }
  }
  return ok ? kOk : kViolation;
}

int cmd_emit(const Common& c, const std::string& what, int n, int r, const std::string& f) {
  if (what == "builtin") {
    EnumSpec spec = enum_spec(c);
    enumerate(spec, [](const Graph& g) { std::cout << graph6_encode(g) << '\n'; });
    return kOk;
  }
  Graph g;
  if (what == "B") {
    g = build_B(n, NamedGraph::parse(f));
  } else if (what == "Bp-P3") {
    g = build_B_prime_P3(n);
  } else if (what == "Bp-C6") {
    g = build_B_prime_7r_C6(r);
  } else {
    throw UsageError("emit needs B, Bp-P3, Bp-C6 or builtin, got '" + what + "'");
  }
  std::cout << graph6_encode(g) << '\n';
  return kOk;
}

/// Runs `fn` on the single graph6 argument, or on every line of stdin for "-".
template <typename Fn>
int for_each_input(const std::string& arg, const Common& c, Fn fn) {
  if (arg != "-") return fn(graph6_decode(arg));
  int worst = kOk;
  std::string line;
  long number = 0;
  while (std::getline(std::cin, line)) {
    ++number;
    if (line.empty()) continue;
    std::optional<Graph> g;
    try {
      g = graph6_decode(line);
    } catch (const IsolationError& e) {
      if (c.strict_parse) throw Graph6Error(e.what(), number);
      std::cerr << "skipped line " << number << ": " << e.what() << '\n';
      continue;
    }
    worst = std::max<int>(worst, fn(*g));
  }
  return worst;
}

int cmd_solve(const Common& c, const std::string& arg) {
  const FamilySpec fam = FamilySpec::parse(c.family);
  return for_each_input(arg, c, [&](const Graph& g) {
    if (c.budget) {
      const auto r = exact_iota_within(g, fam, *c.budget);
      if (!r) {
        std::cout << graph6_encode(g) << " iota>" << *c.budget << " (budget)\n";
        return kOk;
      }
      std::cout << graph6_encode(g) << " iota=" << r->value << " witness=" << r->witness.to_string()
                << '\n';
      return kOk;
    }
    const IsolationResult r = exact_iota(g, fam);
    std::cout << graph6_encode(g) << " iota=" << r.value << " witness=" << r.witness.to_string()
              << '\n';
    return kOk;
  });
}

int cmd_certify(const Common& c, const std::string& arg) {
  const Theorem t = theorem_for(c.family);
  if (t != Theorem::K2 && t != Theorem::K3) throw UsageError("certify needs --family e2 or e3");
  return for_each_input(arg, c, [&](const Graph& g) {
    const Certificate cert = t == Theorem::K2 ? isolate_k2(g) : isolate_k3(g);
    std::cout << graph6_encode(g) << " d=" << cert.d.to_string() << " size=" << cert.d.size()
              << " bound=" << cert.bound;
    if (cert.beta) std::cout << " beta=" << cert.beta->to_string();
    std::cout << '\n';
    for (const TraceEntry& e : cert.trace) std::cout << "  " << format_trace_entry(e) << '\n';
    return kOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact isolation numbers, bound sweeps and certificates for small graphs",
               "isolation-lab"};
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  std::optional<int> jobs;
  app.add_option("--n-min", c.n_min, "Smallest order to check")->check(CLI::Range(0, 64));
  app.add_option("--n-max", c.n_max, "Largest order to check")->check(CLI::Range(0, 64));
  app.add_option("--source", c.source, "builtin, file:PATH or - (graph6 on stdin)");
  app.add_option("--family", c.family, "e1, e2, e3, cycles or k:K");
  app.add_option("--jobs", jobs, "Worker threads (default: $ISOLATION_LAB_JOBS or 1)")
      ->check(CLI::Range(1, 1024));
  app.add_option("--json", c.json, "Write JSON-lines rows to PATH");
  app.add_option("--csv", c.csv, "Write CSV rows to PATH");
  app.add_option("--budget", c.budget, "Largest isolating-set size the exact solver tries")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--strict-parse", c.strict_parse, "Abort on the first malformed graph6 line");

  auto* sweep = app.add_subcommand("sweep", "Check a bound on every connected graph");
  bool no_prover = false;
  sweep->add_flag("--no-prover", no_prover, "Skip the constructive prover for e2/e3");

  auto* ckn = app.add_subcommand("ckn", "Tabulate c_{k,n} = max iota_k / n");
  auto* extremal = app.add_subcommand("extremal", "Check the extremal constructions");
  std::string construction = "all";
  extremal->add_option("construction", construction, "B-K2, B-K3, Bp-P3, Bp-C6 or all");

  auto* emit = app.add_subcommand("emit", "Print constructions or the builtin stream as graph6");
  std::string what;
  int emit_n = 12, emit_r = 1;
  std::string emit_f = "K3";
  emit->add_option("what", what, "B, Bp-P3, Bp-C6 or builtin")->required();
  emit->add_option("--n", emit_n, "Order for B and Bp-P3")->check(CLI::Range(1, 64));
  emit->add_option("--r", emit_r, "Copies for Bp-C6")->check(CLI::Range(1, 9));
  emit->add_option("--f", emit_f, "Piece F for B (K1, K2, P3, K3, K13, C6, C6P, Kn, Pn)");

  auto* solve = app.add_subcommand("solve", "Exact isolation number of a graph6 graph");
  std::string solve_arg;
  solve->add_option("graph6", solve_arg, "graph6 string, or - for stdin lines")->required();

  auto* certify = app.add_subcommand("certify", "Constructive isolating set with case trace");
  std::string certify_arg;
  certify->add_option("graph6", certify_arg, "graph6 string, or - for stdin lines")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    c.jobs = jobs ? *jobs : default_jobs();
    if (*sweep) return cmd_sweep(c, no_prover);
    if (*ckn) return cmd_ckn(c);
    if (*extremal) return cmd_extremal(c, construction);
    if (*emit) return cmd_emit(c, what, emit_n, emit_r, emit_f);
    if (*solve) return cmd_solve(c, solve_arg);
    if (*certify) return cmd_certify(c, certify_arg);
  } catch (const Graph6Error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ExceptionGraphError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kViolation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IsolationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
