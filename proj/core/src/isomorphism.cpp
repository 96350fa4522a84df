#include "isolation/isomorphism.hpp"

#include <algorithm>
#include <array>

namespace isolab {

namespace {

void check_cap(const Graph& g) {
  if (g.order() > kIsomorphismCap) {
    throw SizeCapError("isomorphism test supports at most " + std::to_string(kIsomorphismCap) +
                       " vertices, got " + std::to_string(g.order()));
  }
}

struct Matcher {
  const Graph& a;
  const Graph& b;
  std::array<int, kMaxVertices> map{};
  VertexSet used;

  bool extend(int u) {
    if (u == a.order()) return true;
    for (int w : b.vertices() - used) {
      if (a.degree(u) != b.degree(w)) continue;
      bool ok = true;
      for (int p = 0; p < u && ok; ++p) ok = a.has_edge(p, u) == b.has_edge(map[p], w);
      if (!ok) continue;
      map[u] = w;
      used.insert(w);
      if (extend(u + 1)) return true;
      used.erase(w);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism_small(const Graph& a, const Graph& b) {
  check_cap(a);
  check_cap(b);
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  Matcher m{a, b, {}, {}};
  if (!m.extend(0)) return std::nullopt;
  return std::vector<int>(m.map.begin(), m.map.begin() + a.order());
}

bool is_isomorphic_small(const Graph& a, const Graph& b) {
  return find_isomorphism_small(a, b).has_value();
}

bool induced_is_isomorphic(const Graph& g, VertexSet part, const Graph& pattern) {
  if (part.size() != pattern.order()) return false;
  if (edges_within(g, part) != pattern.edge_count()) return false;
  return is_isomorphic_small(induced_subgraph(g, part).graph, pattern);
}

}  // namespace isolab
