#include "isolation/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace isolab {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  out += '}';
  return out;
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeCapError("graph order " + std::to_string(n) + " outside 0.." +
                       std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  check_order(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} out of range for order " + std::to_string(n));
    }
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
    adj_[e.u] |= std::uint64_t{1} << e.v;
    adj_[e.v] |= std::uint64_t{1} << e.u;
  }
}

Graph Graph::from_adjacency(int n, std::span<const std::uint64_t> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) < n) throw PreconditionError("adjacency has too few rows");
  Graph g;
  g.n_ = n;
  const std::uint64_t mask = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~mask) != 0) throw PreconditionError("neighbor index out of range");
    if ((rows[v] >> v) & 1U) throw PreconditionError("loop at vertex " + std::to_string(v));
    g.adj_[v] = rows[v];
  }
  for (int v = 0; v < n; ++v) {
    for (int u : VertexSet(g.adj_[v])) {
      if (!g.has_edge(u, v)) throw PreconditionError("adjacency is not symmetric");
    }
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < n_; ++v) {
    for (int u : VertexSet(adj_[v] & VertexSet::range(v).bits())) out.push_back({u, v});
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ &&
         std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

VertexSet Subgraph::lift(VertexSet local) const {
  VertexSet out;
  for (int v : local) out.insert(to_host[v]);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet xs) {
  VertexSet out = xs;
  for (int v : xs) out |= g.neighbors(v);
  return out;
}

int edges_within(const Graph& g, VertexSet part) {
  int twice = 0;
  for (int v : part) twice += (g.neighbors(v) & part).size();
  return twice / 2;
}

Subgraph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  Subgraph sub;
  sub.to_host = keep.to_vector();
  std::array<int, kMaxVertices> local{};
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) local[sub.to_host[i]] = static_cast<int>(i);
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
    for (int u : g.neighbors(sub.to_host[i]) & keep) rows[i] |= std::uint64_t{1} << local[u];
  }
  sub.graph = Graph::from_adjacency(static_cast<int>(sub.to_host.size()), rows);
  return sub;
}

Subgraph delete_closed_neighborhood(const Graph& g, VertexSet xs) {
  return induced_subgraph(g, g.vertices() - closed_neighborhood(g, xs));
}

VertexSet component_of(const Graph& g, int v, VertexSet within) {
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier) next |= g.neighbors(u);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within & g.vertices();
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest.first(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

VertexSet leaves(const Graph& g, VertexSet within) {
  VertexSet out;
  for (int v : within) {
    if (degree_within(g, v, within) == 1) out.insert(v);
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (Edge e : b.edges()) es.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), es);
}

Graph permute(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> es;
  for (Edge e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycles need at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  }
  return Graph(n, es);
}

Graph make_graph(NamedGraph which) {
  switch (which.tag) {
    case GraphTag::K1: return complete_graph(1);
    case GraphTag::K2: return complete_graph(2);
    case GraphTag::P3: return path_graph(3);
    case GraphTag::K3: return complete_graph(3);
    case GraphTag::K13: return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
    case GraphTag::C5: return cycle_graph(5);
    case GraphTag::C6: return cycle_graph(6);
    case GraphTag::C6P: {
      std::vector<Edge> es = cycle_graph(6).edges();
      es.push_back({0, 6});
      return Graph(7, es);
    }
    case GraphTag::C6PP: {
      std::vector<Edge> es = cycle_graph(6).edges();
      es.push_back({0, 6});
      es.push_back({2, 4});
      return Graph(7, es);
    }
    case GraphTag::C7: return cycle_graph(7);
    case GraphTag::Pn: return path_graph(which.size);
    case GraphTag::Cn: return cycle_graph(which.size);
    case GraphTag::Kn: return complete_graph(which.size);
  }
  throw PreconditionError("unknown graph tag");
}

std::string NamedGraph::name() const {
  switch (tag) {
    case GraphTag::K1: return "K1";
    case GraphTag::K2: return "K2";
    case GraphTag::P3: return "P3";
    case GraphTag::K3: return "K3";
    case GraphTag::K13: return "K13";
    case GraphTag::C5: return "C5";
    case GraphTag::C6: return "C6";
    case GraphTag::C6P: return "C6P";
    case GraphTag::C6PP: return "C6PP";
    case GraphTag::C7: return "C7";
    case GraphTag::Pn: return "P" + std::to_string(size);
    case GraphTag::Cn: return "C" + std::to_string(size);
    case GraphTag::Kn: return "K" + std::to_string(size);
  }
  return "?";
}

int NamedGraph::vertex_count() const {
  switch (tag) {
    case GraphTag::K1: return 1;
    case GraphTag::K2: return 2;
    case GraphTag::P3:
    case GraphTag::K3: return 3;
    case GraphTag::K13: return 4;
    case GraphTag::C5: return 5;
    case GraphTag::C6: return 6;
    case GraphTag::C6P:
    case GraphTag::C6PP:
    case GraphTag::C7: return 7;
    case GraphTag::Pn:
    case GraphTag::Cn:
    case GraphTag::Kn: return size;
  }
  return 0;
}

NamedGraph NamedGraph::parse(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "K1") return {GraphTag::K1};
  if (t == "K2") return {GraphTag::K2};
  if (t == "P3") return {GraphTag::P3};
  if (t == "K3") return {GraphTag::K3};
  if (t == "K13" || t == "K1,3") return {GraphTag::K13};
  if (t == "C5") return {GraphTag::C5};
  if (t == "C6") return {GraphTag::C6};
  if (t == "C6P" || t == "C6'") return {GraphTag::C6P};
  if (t == "C6PP" || t == "C6''") return {GraphTag::C6PP};
  if (t == "C7") return {GraphTag::C7};
  if (t.size() >= 2 && (t[0] == 'P' || t[0] == 'C' || t[0] == 'K')) {
    int size = 0;
    auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), size);
    if (ec == std::errc() && ptr == t.data() + t.size() && size >= 1) {
      GraphTag tag = t[0] == 'P' ? GraphTag::Pn : t[0] == 'C' ? GraphTag::Cn : GraphTag::Kn;
      if (tag == GraphTag::Cn && size < 3) throw PreconditionError("cycles need at least 3 vertices");
      return {tag, size};
    }
  }
  throw PreconditionError("unknown graph name '" + std::string(text) + "'");
}

}  // namespace isolab
