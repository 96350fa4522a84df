#include "isolation/enumerate.hpp"

#include <array>
#include <fstream>
#include <iostream>

#include "isolation/graph6.hpp"

namespace isolab {

GraphSource parse_source(std::string_view text) {
  if (text == "builtin") return BuiltinSource{};
  if (text == "-") return Graph6Stdin{};
  if (text.starts_with("file:") && text.size() > 5) return Graph6File{std::string(text.substr(5))};
  throw PreconditionError("bad source '" + std::string(text) + "' (builtin, file:PATH or -)");
}

namespace {

/// Searches for a relabeling whose string beats g's. Position p of the
/// relabeled graph is filled by an unused vertex u; `keys[u]` holds the bits
/// adj(perm[0],u) .. adj(perm[p-1],u), first bit most significant, which is
/// exactly the column p of the relabeled string.
class CanonicalCheck {
 public:
  explicit CanonicalCheck(const Graph& g) : g_(g), n_(g.order()) {
    for (int p = 0; p < n_; ++p) {
      std::uint32_t key = 0;
      for (int i = 0; i < p; ++i) key = (key << 1) | (g.has_edge(i, p) ? 1U : 0U);
      target_[p] = key;
    }
  }

  bool beaten() {
    std::array<std::uint32_t, kMaxVertices> keys{};
    return search(0, VertexSet(), keys);
  }

 private:
  bool search(int p, VertexSet used, const std::array<std::uint32_t, kMaxVertices>& keys) {
    if (p == n_) return false;
    for (int u : g_.vertices() - used) {
      if (keys[u] > target_[p]) return true;
      if (keys[u] < target_[p]) continue;
      std::array<std::uint32_t, kMaxVertices> next;
      const VertexSet nbrs = g_.neighbors(u);
      for (int w = 0; w < n_; ++w) next[w] = (keys[w] << 1) | (nbrs.contains(w) ? 1U : 0U);
      VertexSet now_used = used;
      now_used.insert(u);
      if (search(p + 1, now_used, next)) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::array<std::uint32_t, kMaxVertices> target_{};
};

Graph with_new_vertex(const Graph& g, std::uint64_t attach) {
  const int n = g.order();
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) {
    rows[v] = g.neighbors(v).bits();
    if ((attach >> v) & 1U) rows[v] |= std::uint64_t{1} << n;
  }
  rows[n] = attach;
  return Graph::from_adjacency(n + 1, rows);
}

/// Orderly generation: every canonical graph on m + 1 vertices is a canonical
/// graph on m vertices plus one new last vertex.
void generate(const Graph& g, int target, bool connected_only, const GraphVisitor& visit,
              std::uint64_t& emitted) {
  if (g.order() == target) {
    if (!connected_only || is_connected(g)) {
      visit(g);
      ++emitted;
    }
    return;
  }
  const std::uint64_t subsets = std::uint64_t{1} << g.order();
  for (std::uint64_t attach = 0; attach < subsets; ++attach) {
    Graph next = with_new_vertex(g, attach);
    if (is_canonical(next)) generate(next, target, connected_only, visit, emitted);
  }
}

}  // namespace

bool is_canonical(const Graph& g) { return !CanonicalCheck(g).beaten(); }

EnumerationSummary enumerate_graph6(std::istream& in, const EnumSpec& spec,
                                    const GraphVisitor& visit) {
  EnumerationSummary summary;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line == "\r") continue;
    Graph g;
    try {
      g = graph6_decode(line);
    } catch (const IsolationError& e) {
      if (spec.strict_parse) throw Graph6Error(e.what(), number);
      summary.issues.push_back({number, e.what()});
      continue;
    }
    if (g.order() < spec.n_min || g.order() > spec.n_max) continue;
    if (spec.connected_only && !is_connected(g)) continue;
    visit(g);
    ++summary.emitted;
  }
  return summary;
}

EnumerationSummary enumerate(const EnumSpec& spec, const GraphVisitor& visit) {
  if (std::holds_alternative<Graph6File>(spec.source)) {
    const std::string& path = std::get<Graph6File>(spec.source).path;
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open graph6 file '" + path + "'");
    return enumerate_graph6(in, spec, visit);
  }
  if (std::holds_alternative<Graph6Stdin>(spec.source)) {
    return enumerate_graph6(std::cin, spec, visit);
  }
  if (spec.n_max > kBuiltinEnumerationCap) {
    throw SizeCapError("builtin enumeration supports n <= " +
                       std::to_string(kBuiltinEnumerationCap) + ", got " +
                       std::to_string(spec.n_max));
  }
  EnumerationSummary summary;
  for (int n = std::max(spec.n_min, 0); n <= spec.n_max; ++n) {
    if (n == 0) {
      if (!spec.connected_only) {
        visit(Graph());
        ++summary.emitted;
      }
      continue;
    }
    generate(Graph(1, {}), n, spec.connected_only, visit, summary.emitted);
  }
  return summary;
}

std::vector<Graph> enumerate_all(const EnumSpec& spec) {
  std::vector<Graph> out;
  enumerate(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_connected(int n) {
  if (n > kBuiltinEnumerationCap) {
    throw SizeCapError("count_connected supports n <= " + std::to_string(kBuiltinEnumerationCap));
  }
  return enumerate(EnumSpec::builtin(n), [](const Graph&) {}).emitted;
}

}  // namespace isolab
