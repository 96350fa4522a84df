#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isolation/bounds.hpp"
#include "isolation/graph.hpp"

namespace isolab {

// Constructive versions of the inductive bound proofs for E2 and E3: given a
// connected graph outside the exception set, build an isolating set within
// floor((4n - l) / 14) (k = 2) or floor(n / 4) (k = 3), recording which proof
// case fired at every recursion step. Every step re-verifies its own output;
// a failed check raises InternalConsistencyError.

/// One recursion step. `v` is the chosen maximum-degree vertex (host labels),
/// or -1 for steps that never pick one.
struct TraceEntry {
  std::string label;
  int n = 0;
  int v = -1;
  int size = 0;
};

/// "case=<label> n=<n> v=<v> |d|=<s>"
std::string format_trace_entry(const TraceEntry& entry);
/// The case label without its "/sub-branch" suffix.
std::string_view top_level_label(std::string_view label);

/// The case labels a complete run can produce at the top level.
inline constexpr std::array<std::string_view, 8> kTopLevelLabels = {
    "base", "path-cycle", "dominated", "h-empty",
    "case1", "case2.1", "case2.2.1", "case2.2.2"};

struct Certificate {
  VertexSet d;
  int k = 2;
  /// The integer bound |d| is certified against.
  int bound = 0;
  /// beta(G) for k = 2.
  std::optional<Beta14> beta;
  /// Pre-order: the first entry is the call on the whole graph.
  std::vector<TraceEntry> trace;
};

/// Bad-component classes of G - N[v] for k = 2:
/// 1 P3, 2 K3, 3 C6, 4 K13 with all star leaves pendant in G, 5 C6' and
/// 6 C6'' with their leaf pendant in G.
enum class BadClass { P3 = 1, K3 = 2, C6 = 3, K13 = 4, C6P = 5, C6PP = 6 };

/// Whether the component `h` of G - N[v] is bad, i.e. iota_2(H) > beta_G(H).
/// `frontier` is N(v). Leaves of K13, C6' and C6'' count as pendant when they
/// have no neighbor in the frontier.
std::optional<BadClass> classify_bad_component_k2(const Graph& g, VertexSet h,
                                                  VertexSet frontier);

/// D_{x,H}: an E2-isolating set of H - y for a bad H attached at y. {y4} on a
/// 6-cycle y1..y6 through y = y1 for the C6 classes, empty otherwise. Throws
/// PreconditionError if y is the leaf of a K13, C6' or C6''.
VertexSet residual_set_for_bad(const Graph& g, VertexSet h, int y);
/// The E3 analogue: empty for K3, {y4} on the 7-cycle y1..y7 for C7.
VertexSet residual_set_for_bad_k3(const Graph& g, VertexSet h, int y);

/// A simple cycle of exactly `length` vertices in G[within] starting at
/// `start`, listed in order from start.
std::optional<std::vector<int>> find_cycle_through(const Graph& g, VertexSet within, int start,
                                                   int length);

/// Throws ExceptionGraphError for S-graphs and PreconditionError for
/// disconnected input.
Certificate isolate_k2(const Graph& g);
/// Throws ExceptionGraphError for K3 and C7 and PreconditionError for
/// disconnected input.
Certificate isolate_k3(const Graph& g);

}  // namespace isolab
