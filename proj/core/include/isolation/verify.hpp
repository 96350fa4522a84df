#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "isolation/bounds.hpp"
#include "isolation/enumerate.hpp"
#include "isolation/graph.hpp"

namespace isolab {

struct SweepOptions {
  Theorem theorem = Theorem::K2;
  EnumSpec source;
  int jobs = 1;
  /// Largest isolating-set size the exact solver may try; larger optima are
  /// reported as skipped rows.
  std::optional<int> budget;
  /// For K2 and K3, also run the prover and check exact <= |d| <= bound.
  bool with_prover = true;
  /// Cap on rows kept in the report (rows are still streamed to the callback).
  std::size_t keep_rows = 0;
};

struct ExceptionHit {
  std::string graph6;
  ExceptionClass which;
};

struct SweepReport {
  Theorem theorem = Theorem::K2;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t checked = 0;
  std::uint64_t tight = 0;
  std::uint64_t skipped = 0;
  std::vector<ExceptionHit> exceptions;
  /// graph6 strings of bound or sandwich violations.
  std::vector<std::string> violations;
  /// "graph6: message" for internal-consistency failures.
  std::vector<std::string> errors;
  std::map<std::string, std::uint64_t> case_counts;
  std::vector<ParseIssue> parse_issues;
  std::vector<VerificationRecord> rows;
  double seconds = 0;

  bool ok() const { return violations.empty() && errors.empty(); }
};

using RowSink = std::function<void(const VerificationRecord&)>;

/// Checks every connected graph of the source against the theorem. Graphs are
/// processed in batches by `jobs` workers and handed to `sink` in input order.
SweepReport run_sweep(const SweepOptions& opts, const RowSink& sink = {});

/// Checks one graph the way run_sweep does.
VerificationRecord check_graph(const Graph& g, Theorem t, std::optional<int> budget,
                               bool with_prover);

/// Exact rational p/q in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::string to_string() const;
  bool operator==(const Ratio&) const = default;
};

struct CknRow {
  int k = 1;
  int n = 1;
  Ratio c;
  int iota = 0;
  /// First maximizer in stream order.
  std::string witness;
};

/// c_{k,n} = max iota_k(G) / n over the connected n-vertex graphs of `source`.
CknRow ckn_row(int k, int n, const GraphSource& source = BuiltinSource{});
/// The value the closed formulas predict.
Ratio ckn_formula(int k, int n);

struct ExtremalRow {
  std::string construction;  // "B-K2", "B-K3", "Bp-P3", "Bp-C6"
  int param = 0;             // n, or r for Bp-C6
  int n = 0;
  int k = 1;
  std::string graph6;
  int expected = 0;
  std::optional<int> iota;  // empty when the budget ran out
  bool ok = false;
};

/// The extremal equality rows for one construction, or all of them for "all".
/// Bounds are exact except for Bp-C6 at r = 3, which uses a size budget of 6.
std::vector<ExtremalRow> extremal_rows(const std::string& which);
ExtremalRow extremal_row(const std::string& construction, int param);
/// The parameter range checked for each construction.
std::vector<int> extremal_params(const std::string& construction);

/// {graph6, n, leaves, iota, bound, exception, tight, cert_size?, case_trace?}
std::string record_json(const VerificationRecord& rec);
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const VerificationRecord& rec);

}  // namespace isolab
