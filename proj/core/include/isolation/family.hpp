#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "isolation/graph.hpp"

namespace isolab {

/// The forbidden family F of an isolation problem.
///  - EdgesAtLeast(k): connected graphs with at least k edges (1 <= k <= 16)
///  - Cycles: all cycles
///  - CompleteK(k): the k-clique (1 <= k <= 8)
class FamilySpec {
 public:
  enum class Kind { EdgesAtLeast, Cycles, CompleteK };

  static FamilySpec edges_at_least(int k);
  static FamilySpec cycles() { return FamilySpec(Kind::Cycles, 0); }
  static FamilySpec complete(int k);
  /// "e1", "e2", "cycles", "k:4".
  static FamilySpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  std::string to_string() const;
  bool operator==(const FamilySpec&) const = default;

 private:
  FamilySpec(Kind kind, int k) : kind_(kind), k_(k) {}
  Kind kind_;
  int k_;
};

/// Whether G[within] contains an F-graph. The witness is the vertex set of an
/// offending component (EdgesAtLeast, Cycles) or of a clique (CompleteK).
std::optional<VertexSet> contains_family_graph(const Graph& g, FamilySpec fam,
                                               VertexSet within);
inline std::optional<VertexSet> contains_family_graph(const Graph& g, FamilySpec fam) {
  return contains_family_graph(g, fam, g.vertices());
}

/// A small vertex set W such that G[W] contains an F-graph, chosen to keep
/// the closed neighborhood N[W] (the branching set of the exact search) small.
/// Ties break toward smaller vertex indices.
std::optional<VertexSet> find_small_witness(const Graph& g, FamilySpec fam, VertexSet within);

/// D is F-isolating for G[within] iff G[within] - N[D] has no F-graph.
/// `d` must be a subset of `within`.
bool is_isolating(const Graph& g, VertexSet d, FamilySpec fam, VertexSet within);
inline bool is_isolating(const Graph& g, VertexSet d, FamilySpec fam) {
  return is_isolating(g, d, fam, g.vertices());
}

struct IsolationResult {
  int value = 0;
  VertexSet witness;
};

/// Minimum F-isolating set of G[within]. Components are solved independently;
/// each by iterative deepening on the set size, branching only on N[W] for a
/// small witness W of the residual graph.
IsolationResult exact_iota(const Graph& g, FamilySpec fam, VertexSet within);
inline IsolationResult exact_iota(const Graph& g, FamilySpec fam) {
  return exact_iota(g, fam, g.vertices());
}

/// As exact_iota, but gives up (returns nullopt) once the optimum is known to
/// exceed `budget`.
std::optional<IsolationResult> exact_iota_within(const Graph& g, FamilySpec fam, int budget,
                                                 VertexSet within);
inline std::optional<IsolationResult> exact_iota_within(const Graph& g, FamilySpec fam,
                                                        int budget) {
  return exact_iota_within(g, fam, budget, g.vertices());
}

/// iota_j(g) <= iota_k(g) for j >= k; always true, used as a test oracle.
bool iota_monotonicity_check(const Graph& g, int j, int k);

}  // namespace isolab
