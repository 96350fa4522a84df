#pragma once

// Randomized and exhaustive property checks shared by the unit tests and the
// acceptance binary. Each returns how many cases it looked at and the first
// counterexample, if any.

#include <random>
#include <string>

#include "isolation/bounds.hpp"
#include "isolation/constructions.hpp"
#include "isolation/enumerate.hpp"
#include "isolation/family.hpp"
#include "isolation/graph6.hpp"
#include "support/oracles.hpp"

namespace isolab::testing {

struct PropertyResult {
  long checked = 0;
  long failures = 0;
  std::string first_failure;

  void fail(std::string what) {
    if (failures++ == 0) first_failure = std::move(what);
  }
  bool ok() const { return failures == 0 && checked > 0; }
};

inline FamilySpec random_family(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return FamilySpec::edges_at_least(1);
    case 1: return FamilySpec::edges_at_least(2);
    case 2: return FamilySpec::edges_at_least(3);
    case 3: return FamilySpec::cycles();
    default: return FamilySpec::complete(3);
  }
}

inline VertexSet random_subset(std::mt19937_64& rng, VertexSet from, double p) {
  std::bernoulli_distribution coin(p);
  VertexSet out;
  for (int v : from) {
    if (coin(rng)) out.insert(v);
  }
  return out;
}

/// iota(G) <= |X| + iota(G - Y) for X a vertex set and Y a subset of N[X].
inline PropertyResult deletion_inequality(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int i = 0; i < samples; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<>(0.15, 0.7)(rng));
    const FamilySpec fam = random_family(rng);
    const VertexSet x = random_subset(rng, g.vertices(), 0.25);
    const VertexSet y = random_subset(rng, closed_neighborhood(g, x), 0.7);
    const int whole = exact_iota(g, fam).value;
    const int rest = exact_iota(g, fam, g.vertices() - y).value;
    ++r.checked;
    if (whole > x.size() + rest) {
      r.fail(graph6_encode(g) + " " + fam.to_string() + " X=" + x.to_string() +
             " Y=" + y.to_string());
    }
  }
  return r;
}

/// iota of a disjoint union equals the sum over its parts.
inline PropertyResult component_additivity(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int i = 0; i < samples; ++i) {
    const FamilySpec fam = random_family(rng);
    const int parts = std::uniform_int_distribution<int>(2, 3)(rng);
    Graph u;
    int sum = 0;
    for (int p = 0; p < parts; ++p) {
      const int n = std::uniform_int_distribution<int>(1, 7)(rng);
      const Graph piece = oracle::random_connected_graph(rng, n, 0.4);
      sum += oracle::iota(piece, fam);
      u = disjoint_union(u, piece);
    }
    ++r.checked;
    if (exact_iota(u, fam).value != sum) r.fail(graph6_encode(u) + " " + fam.to_string());
  }
  return r;
}

/// beta over any partition of V(G) into parts adds up to beta(G).
inline PropertyResult beta_partition(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int i = 0; i < samples; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 16)(rng);
    const Graph g = oracle::random_graph(rng, n, 0.25);
    const int t = std::uniform_int_distribution<int>(1, n)(rng);
    std::vector<VertexSet> parts(t);
    for (int v = 0; v < n; ++v) parts[std::uniform_int_distribution<int>(0, t - 1)(rng)].insert(v);
    Beta14 total;
    for (VertexSet p : parts) total += beta_relative(g, p);
    ++r.checked;
    if (total != beta(g)) r.fail(graph6_encode(g));
  }
  return r;
}

/// beta(H) <= beta_G(H) for a connected induced subgraph H with >= 2 vertices.
inline PropertyResult beta_subgraph(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  while (r.checked < samples) {
    const int n = std::uniform_int_distribution<int>(2, 16)(rng);
    const Graph g = oracle::random_connected_graph(rng, n, 0.2);
    // Grow a connected vertex set from a random start.
    const int target = std::uniform_int_distribution<int>(2, n)(rng);
    VertexSet h = VertexSet::single(std::uniform_int_distribution<int>(0, n - 1)(rng));
    while (h.size() < target) {
      const std::vector<int> frontier = (closed_neighborhood(g, h) - h).to_vector();
      if (frontier.empty()) break;
      h.insert(frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)]);
    }
    if (h.size() < 2) continue;
    ++r.checked;
    if (beta(induced_subgraph(g, h).graph) > beta_relative(g, h)) {
      r.fail(graph6_encode(g) + " H=" + h.to_string());
    }
  }
  return r;
}

/// iota(Cycles) <= iota_3 <= iota_2 <= iota_1 on every builtin graph up to n_max.
inline PropertyResult monotonicity(int n_max) {
  PropertyResult r;
  for (int n = 1; n <= n_max; ++n) {
    enumerate(EnumSpec::builtin(n), [&](const Graph& g) {
      const int c = exact_iota(g, FamilySpec::cycles()).value;
      const int i3 = exact_iota(g, FamilySpec::edges_at_least(3)).value;
      const int i2 = exact_iota(g, FamilySpec::edges_at_least(2)).value;
      const int i1 = exact_iota(g, FamilySpec::edges_at_least(1)).value;
      ++r.checked;
      if (!(c <= i3 && i3 <= i2 && i2 <= i1)) r.fail(graph6_encode(g));
    });
  }
  return r;
}

/// The path and cycle patterns are isolating for every n in [n_lo, n_hi], the
/// k = 3 path pattern at n = 4 excepted (see pattern_isolating_set).
inline PropertyResult patterns(int n_lo, int n_hi) {
  PropertyResult r;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int k : {2, 3}) {
      for (PatternKind kind : {PatternKind::Path, PatternKind::Cycle}) {
        if (k == 3 && kind == PatternKind::Path && n == 4) continue;
        const Graph g = kind == PatternKind::Path ? path_graph(n) : cycle_graph(n);
        const VertexSet d = pattern_isolating_set(kind, n, k);
        ++r.checked;
        if (!is_isolating(g, d, FamilySpec::edges_at_least(k))) {
          r.fail(std::string(kind == PatternKind::Path ? "P" : "C") + std::to_string(n) +
                 " k=" + std::to_string(k));
        }
      }
    }
  }
  return r;
}

}  // namespace isolab::testing
