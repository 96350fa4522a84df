#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isolation/errors.hpp"

namespace isolab {

inline constexpr int kMaxVertices = 64;

/// A set of vertices of a host graph with at most 64 vertices, stored as one
/// machine word. Bit i is set iff vertex i belongs to the set.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  /// {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; requires a non-empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  /// Largest member; requires a non-empty set.
  constexpr int last() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  /// "{0,3,7}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  int u;
  int v;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  /// The graph with no vertices.
  Graph() = default;
  /// n isolated vertices plus the given edges. Throws on loops or out-of-range
  /// endpoints; duplicate edges are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from per-vertex neighbor words, validating symmetry and loops.
  static Graph from_adjacency(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighbors(int v) const {
    return VertexSet(adj_[v] | (std::uint64_t{1} << v));
  }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int edge_count() const;
  int max_degree() const;
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// An induced subgraph materialized as its own graph. `to_host[i]` is the host
/// vertex that became vertex i; the map is increasing.
struct Subgraph {
  Graph graph;
  std::vector<int> to_host;

  VertexSet lift(VertexSet local) const;
};

/// N[X]: the members of `xs` together with all their neighbors.
VertexSet closed_neighborhood(const Graph& g, VertexSet xs);
/// Neighbors of v inside `within`.
inline VertexSet neighbors_within(const Graph& g, int v, VertexSet within) {
  return g.neighbors(v) & within;
}
inline int degree_within(const Graph& g, int v, VertexSet within) {
  return (g.neighbors(v) & within).size();
}
/// Number of edges of G[part].
int edges_within(const Graph& g, VertexSet part);

/// G[keep], relabeled order-preservingly.
Subgraph induced_subgraph(const Graph& g, VertexSet keep);
/// G - N[X].
Subgraph delete_closed_neighborhood(const Graph& g, VertexSet xs);

/// Vertex sets of the components of G[within], sorted by minimum vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) {
  return components(g, g.vertices());
}
/// The component of G[within] that contains `v` (which must be in `within`).
VertexSet component_of(const Graph& g, int v, VertexSet within);
bool is_connected(const Graph& g);

/// Vertices of degree exactly one in G[within].
VertexSet leaves(const Graph& g, VertexSet within);
inline VertexSet leaves(const Graph& g) { return leaves(g, g.vertices()); }
inline int leaf_count(const Graph& g) { return leaves(g).size(); }

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Relabels vertex v of g as perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

/// The small graphs the isolation theorems talk about. Pn, Cn and Kn carry a
/// size parameter; the others are fixed.
enum class GraphTag { K1, K2, P3, K3, K13, C5, C6, C6P, C6PP, C7, Pn, Cn, Kn };

struct NamedGraph {
  GraphTag tag;
  int size = 0;  // only for Pn, Cn, Kn

  /// Parses "K1", "K13", "C6P", "C6'", "P7", "C12", "K4" and friends.
  static NamedGraph parse(std::string_view text);
  std::string name() const;
  int vertex_count() const;
  bool operator==(const NamedGraph&) const = default;
};

/// Concrete labeling: paths and cycles run 0-1-...-(n-1); K13 has center 0;
/// C6' is the 6-cycle 0..5 plus the pendant edge {0,6}; C6'' adds the chord
/// {2,4} to C6'.
Graph make_graph(NamedGraph which);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace isolab
