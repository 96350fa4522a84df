#include "isolation/constructions.hpp"

#include <vector>

namespace isolab {

int spine_count(int n, int k) { return n / (k + 1); }
int spine_with_extras(int n, int k) { return n - k * spine_count(n, k); }
int extra_count_p3(int n) { return spine_with_extras(n, 3) - spine_count(n, 3); }

namespace {

void check_supported(NamedGraph f) {
  switch (f.tag) {
    case GraphTag::K1:
    case GraphTag::K2:
    case GraphTag::P3:
    case GraphTag::K3:
    case GraphTag::K13:
    case GraphTag::C6:
    case GraphTag::C6P:
    case GraphTag::Kn:
    case GraphTag::Pn:
      return;
    default:
      throw PreconditionError("build_B does not support F = " + f.name());
  }
}

std::vector<Edge> b_edges(int n, const Graph& f, bool join_whole_copy) {
  const int k = f.order();
  const int a = spine_count(n, k);
  const int b = spine_with_extras(n, k);
  std::vector<Edge> es;
  for (int i = 0; i + 1 < a; ++i) es.push_back({i, i + 1});
  for (int j = a; j < b; ++j) es.push_back({a - 1, j});
  for (int i = 0; i < a; ++i) {
    const int base = b + i * k;
    for (Edge e : f.edges()) es.push_back({base + e.u, base + e.v});
    for (int u = 0; u < k; ++u) {
      if (join_whole_copy || f.degree(u) != 1) es.push_back({i, base + u});
    }
  }
  return es;
}

}  // namespace

Graph build_B(int n, NamedGraph f) {
  check_supported(f);
  if (n < 1) throw PreconditionError("build_B needs n >= 1");
  const Graph piece = make_graph(f);
  if (piece.order() < 1) throw PreconditionError("build_B needs |V(F)| >= 1");
  if (n <= piece.order()) return path_graph(n);
  return Graph(n, b_edges(n, piece, true));
}

Graph build_B_prime_P3(int n) {
  if (n < 1) throw PreconditionError("build_B_prime_P3 needs n >= 1");
  if (n <= 3) return build_B(n, {GraphTag::P3});
  return Graph(n, b_edges(n, make_graph({GraphTag::P3}), false));
}

Graph build_B_prime_7r_C6(int r) {
  if (r < 1) throw PreconditionError("build_B_prime_7r_C6 needs r >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < r; ++i) es.push_back({i, i + 1});
  for (int i = 0; i < r; ++i) {
    const int base = r + 6 * i;
    for (int t = 0; t < 6; ++t) es.push_back({base + t, base + (t + 1) % 6});
    es.push_back({i, base});
  }
  return Graph(7 * r, es);
}

VertexSet pattern_isolating_set(PatternKind kind, int n, int k) {
  const bool path = kind == PatternKind::Path;
  if (k != 2 && k != 3) throw PreconditionError("patterns exist for k = 2 and k = 3 only");
  if (n > kMaxVertices) throw SizeCapError("pattern order above 64");
  if (k == 2 && n < 4) throw PreconditionError("k = 2 patterns need n >= 4");
  if (k == 3 && path && (n < 1 || n == 4)) {
    throw PreconditionError("the k = 3 path pattern needs n >= 1 and n != 4");
  }
  if (k == 3 && !path && n < 3) throw PreconditionError("cycles need n >= 3");
  VertexSet out;
  if (k == 2 && path) {
    for (int i = 1; 4 * i <= n; ++i) out.insert(4 * i - 1);
  } else if (k == 2) {
    for (int i = 1; i <= (n + 4) / 5; ++i) out.insert(5 * i - 5);
  } else if (path) {
    for (int i = 1; 5 * i <= n; ++i) out.insert(5 * i - 1);
  } else {
    for (int i = 1; i <= (n + 5) / 6; ++i) out.insert(6 * i - 6);
  }
  return out;
}

}  // namespace isolab
