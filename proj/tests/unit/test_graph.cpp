#include "doctest.h"

#include <array>
#include <random>

#include "brute_force.hpp"
#include "degseq/graph.hpp"

using namespace degseq;
using namespace degseq::testing;

namespace {

SmallGraph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  SmallGraph g(n);
  for (const Edge& e : all_pairs(n)) {
    if (coin(rng)) g.add_edge(e.u, e.v);
  }
  return g;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm) {
  SmallGraph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

}  // namespace

TEST_CASE("basic structure") {
  SmallGraph g(4, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.has_edge(2, 1));
  CHECK(g.degree_sequence() == DegreeSequence{2, 2, 2, 0});
  g.remove_edge(0, 1);
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK_THROWS(g.add_edge(0, 4));
  CHECK_THROWS(SmallGraph(17));
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(cycle_graph(5).degree_sequence() == DegreeSequence{2, 2, 2, 2, 2});
}

TEST_CASE("from_rows validates symmetry") {
  const std::array<VertexMask, 3> good = {0b110, 0b001, 0b001};
  const SmallGraph g = SmallGraph::from_rows(3, good);
  CHECK(g.edge_count() == 2);
  const std::array<VertexMask, 3> asym = {0b010, 0b000, 0b000};
  CHECK_THROWS(SmallGraph::from_rows(3, asym));
  const std::array<VertexMask, 3> loop = {0b001, 0b000, 0b000};
  CHECK_THROWS(SmallGraph::from_rows(3, loop));
}

TEST_CASE("edge list round trip uses numeric order") {
  SmallGraph g(12, {{10, 11}, {2, 3}, {0, 11}});
  const std::string text = to_edge_list(g);
  CHECK(text == "0-11\n2-3\n10-11\n");
  CHECK(parse_edge_list(12, text) == g);
  CHECK(parse_edge_list(12, "\n2-3\n\n0-11\n10-11\n") == g);
  CHECK_THROWS(parse_edge_list(4, "0-7\n"));
  CHECK_THROWS(parse_edge_list(4, "0+1\n"));
}

TEST_CASE("complement is an involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const SmallGraph g = random_graph(rng, n, 0.4);
    const SmallGraph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.edge_count() + c.edge_count() == n * (n - 1) / 2);
  }
}

TEST_CASE("containment agrees with the naive injective-map search") {
  std::mt19937 rng(11);
  const std::array<SmallGraph, 4> patterns = {cycle_graph(4), cycle_graph(5), complete_graph(4),
                                              complement(SmallGraph(5, {{0, 1}, {1, 2}}))};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 7)(rng);
    const SmallGraph host = random_graph(rng, n, 0.6);
    for (const SmallGraph& p : patterns) {
      const auto embedding = find_embedding(host, p);
      CHECK(embedding.has_value() == naive_contains(host, p));
      if (!embedding) continue;
      for (const Edge& e : p.edges()) CHECK(host.has_edge((*embedding)[e.u], (*embedding)[e.v]));
    }
  }
}

TEST_CASE("containment is monotone under edge addition") {
  std::mt19937 rng(13);
  const SmallGraph c5 = cycle_graph(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 9)(rng);
    SmallGraph g = random_graph(rng, n, 0.35);
    const bool before = contains_subgraph(g, c5);
    const auto pairs = all_pairs(n);
    const Edge e = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    g.add_edge(e.u, e.v);
    if (before) CHECK(contains_subgraph(g, c5));
  }
}

TEST_CASE("isomorphism under relabeling") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const SmallGraph g = random_graph(rng, n, 0.5);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(is_isomorphic(g, relabel(g, perm)));
  }
  // Same degree sequence (2^6), different graphs.
  const SmallGraph hexagon = cycle_graph(6);
  const SmallGraph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_isomorphic(hexagon, triangles));
  CHECK_THROWS(is_isomorphic(SmallGraph(3), SmallGraph(4)));
}
