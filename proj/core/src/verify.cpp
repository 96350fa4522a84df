#include "isolation/verify.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

#include "isolation/constructions.hpp"
#include "isolation/errors.hpp"
#include "isolation/family.hpp"
#include "isolation/graph6.hpp"
#include "isolation/prover.hpp"

namespace isolab {

VerificationRecord check_graph(const Graph& g, Theorem t, std::optional<int> budget,
                               bool with_prover) {
  VerificationRecord rec = check_bound(g, t, budget);
  const bool proved = t == Theorem::K2 || t == Theorem::K3;
  if (!with_prover || !proved || rec.exception.is_exception()) return rec;
  try {
    const Certificate cert = t == Theorem::K2 ? isolate_k2(g) : isolate_k3(g);
    rec.cert_size = cert.d.size();
    for (const TraceEntry& e : cert.trace) rec.case_trace.push_back(format_trace_entry(e));
    if (rec.iota && *rec.iota > *rec.cert_size) {
      rec.error = "certificate smaller than the exact optimum";
    }
    if (*rec.cert_size > rec.bound) rec.violated = true;
  } catch (const InternalConsistencyError& e) {
    rec.error = e.what();
  }
  return rec;
}

namespace {

constexpr std::size_t kBatch = 2048;

void absorb(SweepReport& report, const VerificationRecord& rec, std::size_t keep) {
  ++report.checked;
  if (rec.exception.is_exception()) report.exceptions.push_back({rec.graph6, rec.exception});
  if (rec.skipped_budget) ++report.skipped;
  if (rec.tight) ++report.tight;
  if (rec.violated) report.violations.push_back(rec.graph6);
  if (!rec.error.empty()) report.errors.push_back(rec.graph6 + ": " + rec.error);
  for (const std::string& line : rec.case_trace) {
    // "case=<label> n=..."
    const std::string label = line.substr(5, line.find(' ') - 5);
    ++report.case_counts[label];
  }
  if (report.rows.size() < keep) report.rows.push_back(rec);
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opts, const RowSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.theorem = opts.theorem;
  report.n_min = opts.source.n_min;
  report.n_max = opts.source.n_max;
  const int jobs = std::max(1, opts.jobs);

  std::vector<Graph> batch;
  std::vector<VerificationRecord> out;
  auto flush = [&] {
    out.assign(batch.size(), {});
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) {
        out[i] = check_graph(batch[i], opts.theorem, opts.budget, opts.with_prover);
      }
    };
    if (jobs == 1 || batch.size() < 2) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    }
    for (const VerificationRecord& rec : out) {
      absorb(report, rec, opts.keep_rows);
      if (sink) sink(rec);
    }
    batch.clear();
  };

  EnumSpec spec = opts.source;
  spec.connected_only = true;
  const EnumerationSummary summary = enumerate(spec, [&](const Graph& g) {
    batch.push_back(g);
    if (batch.size() == kBatch) flush();
  });
  flush();
  report.parse_issues = summary.issues;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string Ratio::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Ratio reduced(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

}  // namespace

Ratio ckn_formula(int k, int n) {
  if (n < 1) throw PreconditionError("c_{k,n} needs n >= 1");
  switch (k) {
    case 1:
      if (n == 2) return {1, 2};
      if (n == 5) return {2, 5};
      return reduced(n / 3, n);
    case 2:
      if (n == 3 || n == 6) return {1, 3};
      return reduced(2 * n / 7, n);
    case 3:
      if (n == 3) return {1, 3};
      if (n == 7) return {2, 7};
      return reduced(n / 4, n);
    default: throw PreconditionError("c_{k,n} formulas exist for k = 1, 2, 3");
  }
}

CknRow ckn_row(int k, int n, const GraphSource& source) {
  if (k < 1 || k > 3) throw PreconditionError("c_{k,n} needs k in 1..3");
  EnumSpec spec{n, n, true, source, false};
  const FamilySpec fam = FamilySpec::edges_at_least(k);
  CknRow row{k, n, {0, 1}, -1, ""};
  enumerate(spec, [&](const Graph& g) {
    const int value = exact_iota(g, fam).value;
    if (value > row.iota) {
      row.iota = value;
      row.witness = graph6_encode(g);
    }
  });
  if (row.iota < 0) throw PreconditionError("no connected graph of order " + std::to_string(n));
  row.c = reduced(row.iota, n);
  return row;
}

std::vector<int> extremal_params(const std::string& construction) {
  auto range = [](int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  };
  if (construction == "B-K2") return range(3, 15);
  if (construction == "B-K3") return range(4, 16);
  if (construction == "Bp-P3") return range(5, 16);
  if (construction == "Bp-C6") return range(1, 3);
  throw PreconditionError("unknown construction '" + construction +
                          "' (B-K2, B-K3, Bp-P3, Bp-C6)");
}

ExtremalRow extremal_row(const std::string& construction, int param) {
  ExtremalRow row;
  row.construction = construction;
  row.param = param;
  Graph g;
  std::optional<int> budget;
  if (construction == "B-K2") {
    g = build_B(param, {GraphTag::K2});
    row.k = 1;
    row.expected = param / 3;
  } else if (construction == "B-K3") {
    g = build_B(param, {GraphTag::K3});
    row.k = 3;
    row.expected = param / 4;
  } else if (construction == "Bp-P3") {
    g = build_B_prime_P3(param);
    row.k = 2;
    row.expected = spine_count(param, 3);
  } else if (construction == "Bp-C6") {
    g = build_B_prime_7r_C6(param);
    row.k = 2;
    row.expected = 2 * param;
    if (param >= 3) budget = row.expected;
  } else {
    extremal_params(construction);  // throws
  }
  row.n = g.order();
  row.graph6 = graph6_encode(g);
  const FamilySpec fam = FamilySpec::edges_at_least(row.k);
  if (budget) {
    if (auto r = exact_iota_within(g, fam, *budget)) row.iota = r->value;
  } else {
    row.iota = exact_iota(g, fam).value;
  }
  row.ok = row.iota == row.expected;
  return row;
}

std::vector<ExtremalRow> extremal_rows(const std::string& which) {
  std::vector<std::string> names;
  if (which == "all") {
    names = {"B-K2", "B-K3", "Bp-P3", "Bp-C6"};
  } else {
    names = {which};
  }
  std::vector<ExtremalRow> rows;
  for (const std::string& name : names) {
    for (int p : extremal_params(name)) rows.push_back(extremal_row(name, p));
  }
  return rows;
}

std::string record_json(const VerificationRecord& rec) {
  nlohmann::ordered_json j;
  j["graph6"] = rec.graph6;
  j["n"] = rec.n;
  j["leaves"] = rec.leaves;
  j["iota"] = rec.iota ? nlohmann::ordered_json(*rec.iota) : nlohmann::ordered_json(nullptr);
  j["bound"] = rec.bound;
  j["exception"] = rec.exception.is_exception() ? nlohmann::ordered_json(rec.exception.describe())
                                                : nlohmann::ordered_json(nullptr);
  j["tight"] = rec.tight;
  if (rec.cert_size) j["cert_size"] = *rec.cert_size;
  if (!rec.case_trace.empty()) j["case_trace"] = rec.case_trace;
  return j.dump();
}

void write_csv_header(std::ostream& out) {
  out << "graph6,n,leaves,iota,bound,exception,tight,cert_size,status\n";
}

void write_csv_row(std::ostream& out, const VerificationRecord& rec) {
  // graph6 characters (63..126) and the exception names never need quoting.
  std::string status = "ok";
  if (rec.skipped_budget) status = "skipped (budget)";
  if (rec.violated) status = "violation";
  if (!rec.error.empty()) status = "error";
  out << rec.graph6 << ',' << rec.n << ',' << rec.leaves << ','
      << (rec.iota ? std::to_string(*rec.iota) : "") << ',' << rec.bound << ','
      << (rec.exception.is_exception() ? rec.exception.describe() : "") << ','
      << (rec.tight ? "true" : "false") << ','
      << (rec.cert_size ? std::to_string(*rec.cert_size) : "") << ',' << status << '\n';
}

}  // namespace isolab
