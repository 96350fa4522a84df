#include "isolation/family.hpp"

#include <array>
#include <charconv>
#include <limits>

namespace isolab {

FamilySpec FamilySpec::edges_at_least(int k) {
  if (k < 1 || k > 16) throw PreconditionError("E_k needs 1 <= k <= 16, got " + std::to_string(k));
  return FamilySpec(Kind::EdgesAtLeast, k);
}

FamilySpec FamilySpec::complete(int k) {
  if (k < 1 || k > 8) throw PreconditionError("K_k needs 1 <= k <= 8, got " + std::to_string(k));
  return FamilySpec(Kind::CompleteK, k);
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto number = [&](std::string_view digits) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw PreconditionError("bad family '" + std::string(text) + "'");
    }
    return value;
  };
  if (text == "cycles") return cycles();
  if (text.starts_with("k:")) return complete(number(text.substr(2)));
  if (text.size() >= 2 && (text[0] == 'e' || text[0] == 'E')) {
    return edges_at_least(number(text.substr(1)));
  }
  throw PreconditionError("bad family '" + std::string(text) + "' (expected eK, cycles or k:K)");
}

std::string FamilySpec::to_string() const {
  switch (kind_) {
    case Kind::EdgesAtLeast: return "e" + std::to_string(k_);
    case Kind::Cycles: return "cycles";
    case Kind::CompleteK: return "k:" + std::to_string(k_);
  }
  return "?";
}

namespace {

bool find_clique(const Graph& g, VertexSet candidates, int need, VertexSet& clique) {
  if (need == 0) return true;
  if (candidates.size() < need) return false;
  for (int v : candidates) {
    clique.insert(v);
    candidates.erase(v);
    if (find_clique(g, candidates & g.neighbors(v), need - 1, clique)) return true;
    clique.erase(v);
  }
  return false;
}

/// Grows a connected set from `start` in BFS order until it spans k edges.
std::optional<VertexSet> grow_edges(const Graph& g, int start, int k, VertexSet within) {
  std::array<int, kMaxVertices> queue{};
  int head = 0;
  int tail = 0;
  queue[tail++] = start;
  VertexSet grown = VertexSet::single(start);
  int edges = 0;
  while (head < tail) {
    const int u = queue[head++];
    for (int w : (g.neighbors(u) & within) - grown) {
      edges += (g.neighbors(w) & grown).size();
      grown.insert(w);
      queue[tail++] = w;
      if (edges >= k) return grown;
    }
  }
  return std::nullopt;
}

/// Vertices of a closed walk through `start` found by BFS; G[result] always
/// contains a cycle.
std::optional<VertexSet> cycle_through(const Graph& g, int start, VertexSet within) {
  std::array<int, kMaxVertices> parent{};
  std::array<int, kMaxVertices> queue{};
  int head = 0;
  int tail = 0;
  queue[tail++] = start;
  parent[start] = -1;
  VertexSet seen = VertexSet::single(start);
  while (head < tail) {
    const int u = queue[head++];
    for (int w : g.neighbors(u) & within) {
      if (w == parent[u]) continue;
      if (seen.contains(w)) {
        VertexSet walk;
        for (int x = u; x != -1; x = parent[x]) walk.insert(x);
        for (int x = w; x != -1; x = parent[x]) walk.insert(x);
        return walk;
      }
      seen.insert(w);
      parent[w] = u;
      queue[tail++] = w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexSet> contains_family_graph(const Graph& g, FamilySpec fam, VertexSet within) {
  within &= g.vertices();
  if (fam.kind() == FamilySpec::Kind::CompleteK) {
    VertexSet clique;
    if (find_clique(g, within, fam.k(), clique)) return clique;
    return std::nullopt;
  }
  for (VertexSet c : components(g, within)) {
    const int m = edges_within(g, c);
    const bool hit = fam.kind() == FamilySpec::Kind::Cycles ? m >= c.size() : m >= fam.k();
    if (hit) return c;
  }
  return std::nullopt;
}

std::optional<VertexSet> find_small_witness(const Graph& g, FamilySpec fam, VertexSet within) {
  within &= g.vertices();
  if (fam.kind() == FamilySpec::Kind::CompleteK) {
    VertexSet clique;
    if (find_clique(g, within, fam.k(), clique)) return clique;
    return std::nullopt;
  }
  std::optional<VertexSet> best;
  int best_cost = std::numeric_limits<int>::max();
  for (VertexSet c : components(g, within)) {
    const int m = edges_within(g, c);
    if (fam.kind() == FamilySpec::Kind::Cycles ? m < c.size() : m < fam.k()) continue;
    for (int s : c) {
      std::optional<VertexSet> w = fam.kind() == FamilySpec::Kind::Cycles
                                       ? cycle_through(g, s, c)
                                       : grow_edges(g, s, fam.k(), c);
      if (!w) continue;
      const int cost = closed_neighborhood(g, *w).size();
      if (cost < best_cost) {
        best_cost = cost;
        best = w;
      }
    }
  }
  return best;
}

bool is_isolating(const Graph& g, VertexSet d, FamilySpec fam, VertexSet within) {
  return !contains_family_graph(g, fam, within - closed_neighborhood(g, d)).has_value();
}

namespace {

class Search {
 public:
  Search(const Graph& g, FamilySpec fam) : g_(g), fam_(fam) {}

  /// Optimum for the connected piece `part`, or nullopt if it exceeds `budget`.
  std::optional<VertexSet> solve(VertexSet part, int budget) {
    VertexSet chosen;
    const int start = lower_bound(part, part, std::nullopt);
    for (int depth = start; depth <= budget && depth <= part.size(); ++depth) {
      chosen = VertexSet();
      if (dfs(part, part, depth, chosen)) return chosen;
    }
    return std::nullopt;
  }

 private:
  /// Greedy count of witnesses whose branching sets are pairwise disjoint.
  int lower_bound(VertexSet alive, VertexSet allowed, std::optional<VertexSet> first) {
    int count = 0;
    VertexSet avail = alive;
    for (;;) {
      std::optional<VertexSet> w = first ? first : find_small_witness(g_, fam_, avail);
      first.reset();
      if (!w) return count;
      const VertexSet branch = closed_neighborhood(g_, *w) & allowed;
      if (branch.empty()) return std::numeric_limits<int>::max() / 2;
      ++count;
      avail -= closed_neighborhood(g_, branch);
    }
  }

  bool dfs(VertexSet alive, VertexSet allowed, int depth, VertexSet& chosen) {
    const std::optional<VertexSet> w = find_small_witness(g_, fam_, alive);
    if (!w) return true;
    if (depth == 0) return false;
    if (depth > 1 && lower_bound(alive, allowed, w) > depth) return false;
    // Every isolating set meets N[W]; a sibling already tried stays excluded.
    for (int u : closed_neighborhood(g_, *w) & allowed) {
      chosen.insert(u);
      if (dfs(alive - g_.closed_neighbors(u), allowed, depth - 1, chosen)) return true;
      chosen.erase(u);
      allowed.erase(u);
    }
    return false;
  }

  const Graph& g_;
  FamilySpec fam_;
};

}  // namespace

std::optional<IsolationResult> exact_iota_within(const Graph& g, FamilySpec fam, int budget,
                                                 VertexSet within) {
  within &= g.vertices();
  IsolationResult total;
  Search search(g, fam);
  for (VertexSet c : components(g, within)) {
    std::optional<VertexSet> best = search.solve(c, budget - total.value);
    if (!best) return std::nullopt;
    total.value += best->size();
    total.witness |= *best;
  }
  return total;
}

IsolationResult exact_iota(const Graph& g, FamilySpec fam, VertexSet within) {
  return *exact_iota_within(g, fam, kMaxVertices, within);
}

bool iota_monotonicity_check(const Graph& g, int j, int k) {
  if (j < k || k < 1) throw PreconditionError("monotonicity needs j >= k >= 1");
  return exact_iota(g, FamilySpec::edges_at_least(j)).value <=
         exact_iota(g, FamilySpec::edges_at_least(k)).value;
}

}  // namespace isolab
