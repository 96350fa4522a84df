#include <doctest.h>

#include <random>

#include "isolation/graph.hpp"
#include "isolation/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace isolab;

TEST_CASE("vertex set basics") {
  VertexSet s{0, 3, 7};
  CHECK(s.size() == 3);
  CHECK(s.first() == 0);
  CHECK(s.last() == 7);
  CHECK(s.to_string() == "{0,3,7}");
  CHECK((s - VertexSet{3}) == VertexSet{0, 7});
  CHECK((s & VertexSet{3, 4}) == VertexSet{3});
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexSet().to_string() == "{}");
  CHECK(s.to_vector() == std::vector<int>{0, 3, 7});
}

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph(65, {}), SizeCapError);
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  std::array<std::uint64_t, 2> asym{0b10, 0b00};
  CHECK_THROWS(Graph::from_adjacency(2, asym));
}

TEST_CASE("closed neighborhoods") {
  const Graph p4 = path_graph(4);
  CHECK(closed_neighborhood(p4, {1}) == VertexSet{0, 1, 2});
  CHECK(closed_neighborhood(p4, {}) == VertexSet{});
  CHECK(closed_neighborhood(complete_graph(4), {0}) == VertexSet::range(4));
}

TEST_CASE("deleting a closed neighborhood") {
  const Subgraph s = delete_closed_neighborhood(path_graph(7), {3});
  CHECK(s.graph.order() == 4);
  CHECK(s.to_host == std::vector<int>{0, 1, 5, 6});
  CHECK(components(s.graph).size() == 2);
  for (VertexSet c : components(s.graph)) CHECK(edges_within(s.graph, c) == 1);

  const Graph c6 = cycle_graph(6);
  const Subgraph same = delete_closed_neighborhood(c6, {});
  CHECK(same.graph == c6);
  CHECK(delete_closed_neighborhood(complete_graph(4), {0}).graph.order() == 0);
}

TEST_CASE("components are sorted by smallest vertex") {
  const Graph g(4, {{2, 3}, {0, 1}});
  const auto cs = components(g);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == VertexSet{0, 1});
  CHECK(cs[1] == VertexSet{2, 3});
  CHECK(components(cycle_graph(6)) == std::vector<VertexSet>{VertexSet::range(6)});
  CHECK(components(Graph()).empty());
}

TEST_CASE("leaves") {
  CHECK(leaves(path_graph(4)) == VertexSet{0, 3});
  CHECK(leaf_count(cycle_graph(6)) == 0);
  CHECK(leaves(make_graph({GraphTag::K13})) == VertexSet{1, 2, 3});
}

TEST_CASE("named graphs") {
  CHECK(make_graph({GraphTag::C6P}).order() == 7);
  CHECK(make_graph({GraphTag::C6P}).edge_count() == 7);
  CHECK(make_graph({GraphTag::C6PP}).edge_count() == 8);
  CHECK(NamedGraph::parse("C6'").tag == GraphTag::C6P);
  CHECK(NamedGraph::parse("K4") == NamedGraph{GraphTag::Kn, 4});
  CHECK(NamedGraph::parse("P7").vertex_count() == 7);
  CHECK_THROWS(NamedGraph::parse("Q3"));
}

TEST_CASE("small isomorphism") {
  const Graph c6p = make_graph({GraphTag::C6P});
  std::vector<int> perm{3, 6, 0, 5, 1, 4, 2};
  CHECK(is_isomorphic_small(c6p, permute(c6p, perm)));
  CHECK_FALSE(is_isomorphic_small(make_graph({GraphTag::K3}), make_graph({GraphTag::P3})));
  CHECK_FALSE(is_isomorphic_small(c6p, make_graph({GraphTag::C6PP})));
  CHECK_THROWS_AS(is_isomorphic_small(path_graph(10), path_graph(10)), SizeCapError);
  CHECK(induced_is_isomorphic(cycle_graph(7), {0, 1, 2}, path_graph(3)));
}

TEST_CASE("isomorphism agrees with the plain oracle on random pairs") {
  std::mt19937_64 rng(11);
  int agree = 0;
  for (int i = 0; i < 400; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    Graph a = oracle::random_graph(rng, n, 0.5);
    Graph b = oracle::random_graph(rng, n, 0.5);
    if (i % 2 == 0) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = permute(a, perm);
    }
    agree += is_isomorphic_small(a, b) == oracle::isomorphic(a, b);
    // Equivalence relation spot checks.
    CHECK(is_isomorphic_small(a, a));
    CHECK(is_isomorphic_small(a, b) == is_isomorphic_small(b, a));
  }
  CHECK(agree == 400);
}

TEST_CASE("structural invariants on random graphs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(0, 20)(rng);
    const Graph g = oracle::random_graph(rng, n, 0.15);
    VertexSet all;
    for (VertexSet c : components(g)) {
      CHECK_FALSE(all.intersects(c));
      all |= c;
    }
    CHECK(all == g.vertices());
    int leaves_by_hand = 0;
    for (int v = 0; v < n; ++v) leaves_by_hand += g.degree(v) == 1;
    CHECK(leaf_count(g) == leaves_by_hand);
    const VertexSet xs = VertexSet(rng()) & g.vertices();
    const Subgraph s = delete_closed_neighborhood(g, xs);
    CHECK(s.lift(s.graph.vertices()) == g.vertices() - closed_neighborhood(g, xs));
  }
}
