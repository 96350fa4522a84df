#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isolation/family.hpp"
#include "isolation/graph.hpp"

namespace isolab {

/// An exact rational numerator/14. All potential-function arithmetic in the
/// k = 2 induction happens here, never in floating point.
class Beta14 {
 public:
  constexpr Beta14() = default;
  constexpr explicit Beta14(std::int64_t numerator) : num_(numerator) {}
  static constexpr Beta14 integer(std::int64_t value) { return Beta14(14 * value); }

  constexpr std::int64_t numerator() const { return num_; }
  /// Largest integer not above the value.
  constexpr std::int64_t floor() const { return num_ >= 0 ? num_ / 14 : -((-num_ + 13) / 14); }

  constexpr Beta14 operator+(Beta14 o) const { return Beta14(num_ + o.num_); }
  constexpr Beta14 operator-(Beta14 o) const { return Beta14(num_ - o.num_); }
  constexpr Beta14& operator+=(Beta14 o) {
    num_ += o.num_;
    return *this;
  }
  constexpr auto operator<=>(const Beta14&) const = default;
  constexpr bool operator==(const Beta14&) const = default;
  /// Compares against an integer count such as |D|.
  friend constexpr auto operator<=>(Beta14 a, std::int64_t count) { return a.num_ <=> 14 * count; }
  friend constexpr bool operator==(Beta14 a, std::int64_t count) { return a.num_ == 14 * count; }

  /// "39/14"
  std::string to_string() const { return std::to_string(num_) + "/14"; }

 private:
  std::int64_t num_ = 0;
};

/// beta(G) = (4|V(G)| - l(G)) / 14.
Beta14 beta(const Graph& g);
/// beta_G(H) for the vertex set `part` of G: (4|part| - |L(G) ∩ part|) / 14,
/// where leaves are those of G[within].
Beta14 beta_relative(const Graph& g, VertexSet part, VertexSet within);
inline Beta14 beta_relative(const Graph& g, VertexSet part) {
  return beta_relative(g, part, g.vertices());
}

int bound_k1(int n);
int bound_k2(int n, int leaves);
int bound_k3(int n);
int bound_cycles(int n);

/// The four sharp upper bounds on connected graphs.
enum class Theorem { K1, K2, K3, Cycles };

std::string theorem_name(Theorem t);
Theorem parse_theorem(std::string_view text);
/// E1, E2, E3 or the cycle family.
FamilySpec theorem_family(Theorem t);
/// The theorem's bound for g (uses the leaf count for K2).
int theorem_bound(Theorem t, const Graph& g);

/// Which excluded graph (if any) g is relative to one theorem. The exception
/// sets differ per theorem, so there is no theorem-free notion.
struct ExceptionClass {
  enum class Kind { NotException, SGraph, K2orC5, K3orC7, Triangle };
  Kind kind = Kind::NotException;
  std::optional<GraphTag> which;

  bool is_exception() const { return kind != Kind::NotException; }
  /// "none", "S-graph C6PP", "7-cycle exception", ...
  std::string describe() const;
  bool operator==(const ExceptionClass&) const = default;
};

ExceptionClass classify_exception(const Graph& g, Theorem t);
/// The S-graph g is isomorphic to (P3, K3, K13, C6, C6P, C6PP), if any.
std::optional<GraphTag> s_graph_tag(const Graph& g);
/// Same, for the induced subgraph G[part].
std::optional<GraphTag> s_graph_tag(const Graph& g, VertexSet part);

/// One row of a theorem check.
struct VerificationRecord {
  std::string graph6;
  int n = 0;
  int leaves = 0;
  std::optional<int> iota;  // empty when the budget was exceeded
  VertexSet iota_witness;
  int bound = 0;
  ExceptionClass exception;
  bool tight = false;
  bool violated = false;
  bool skipped_budget = false;
  std::optional<int> cert_size;
  std::vector<std::string> case_trace;
  std::string error;  // internal-consistency failure text, if any
};

/// Joins the exact solver with the theorem bound. Exception graphs get their
/// exact value recorded but are never flagged as violations. g must be
/// connected.
VerificationRecord check_bound(const Graph& g, Theorem t, std::optional<int> budget = {});

}  // namespace isolab
