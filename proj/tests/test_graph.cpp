#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sdim/corpus.hpp"
#include "sdim/cyclic_structure.hpp"
#include "sdim/group_builders.hpp"
#include "sdim/power_graph.hpp"
#include "test_support.hpp"

using namespace sdim;
using sdim::testing::Matrix;

TEST(PowerGraph, PrimeCyclicIsComplete) {
  for (const char* s : {"Z2", "Z5", "Z7", "Z13"}) {
    Graph g = power_graph(build_group(s));
    EXPECT_EQ(g, complete_graph(g.size())) << s;
  }
}

TEST(PowerGraph, KleinGroupIsAStar) {
  Graph g = power_graph(build_group("E2^2"));
  EXPECT_EQ(g, sdim::testing::star_graph(3));
}

TEST(PowerGraph, Z6Edges) {
  Graph g = power_graph(build_group("Z6"));
  // 0,1,5 see everything; 2-4 are powers of each other; 3 has no link to 2 or 4.
  std::set<std::pair<Vertex, Vertex>> expected;
  for (Vertex u : {0, 1, 5})
    for (Vertex v = 0; v < 6; ++v)
      if (u != v) expected.emplace(std::min(u, v), std::max(u, v));
  expected.emplace(2, 4);
  auto edges = g.edges();
  EXPECT_EQ(std::set(edges.begin(), edges.end()), expected);
}

TEST(PowerGraph, MatchesDefinitionOnCorpus) {
  for (auto spec : builtin_corpus()) {
    Group grp = build_group(spec);
    if (grp.order() > 72) continue;
    SCOPED_TRACE(std::string(spec));
    EXPECT_EQ(sdim::testing::adjacency_matrix(power_graph(grp)), sdim::testing::brute_force_power_adjacency(grp));
  }
}

TEST(Distances, BfsMatchesFloydWarshall) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    Graph g = sdim::testing::random_graph(12, 0.25, rng);
    Matrix d = sdim::testing::floyd_warshall(g);
    for (Vertex s = 0; s < g.size(); ++s) {
      auto b = bfs_distances(g, s);
      for (Vertex v = 0; v < g.size(); ++v) {
        if (d[s][v] >= sdim::testing::kInf)
          EXPECT_EQ(b[v], kUnreachable);
        else
          EXPECT_EQ(b[v], static_cast<std::size_t>(d[s][v]));
      }
    }
  }
}

TEST(Distances, Diameter) {
  EXPECT_EQ(diameter(complete_graph(5)), 1u);
  EXPECT_EQ(diameter(sdim::testing::path_graph(6)), 5u);
  EXPECT_EQ(diameter(sdim::testing::cycle_graph(7)), 3u);
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_FALSE(is_connected(two));
  EXPECT_THROW(diameter(two), Error);
  EXPECT_THROW(require_connected(two), Error);
}

TEST(Distances, PowerGraphsHaveDiameterAtMostTwo) {
  for (auto spec : builtin_corpus()) {
    Graph g = power_graph(build_group(spec));
    EXPECT_LE(diameter(g), 2u) << spec;
  }
}

TEST(ReducedGraph, Examples) {
  auto k = reduced_graph(complete_graph(6));
  EXPECT_EQ(k.representatives.size(), 1u);
  EXPECT_EQ(k.class_size(0), 6u);

  auto z6 = reduced_graph(power_graph(build_group("Z6")));
  ASSERT_EQ(z6.representatives, (std::vector<Vertex>{0, 2, 3}));
  EXPECT_EQ(z6.members(0), (std::vector<Vertex>{0, 1, 5}));
  EXPECT_EQ(z6.members(1), (std::vector<Vertex>{2, 4}));
  EXPECT_EQ(z6.members(2), (std::vector<Vertex>{3}));
  EXPECT_EQ(z6.quotient, sdim::testing::star_graph(2));  // P3 centred on the class of 0

  auto star = reduced_graph(sdim::testing::star_graph(3));
  EXPECT_EQ(star.representatives.size(), 4u);
}

TEST(ReducedGraph, ClassesAreExactlyClosedTwins) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    Graph g = sdim::testing::random_graph(10, t % 2 ? 0.7 : 0.4, rng);
    auto r = reduced_graph(g);
    Matrix a = sdim::testing::adjacency_matrix(g);
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v = 0; v < g.size(); ++v) {
        const bool twins = sdim::testing::closed_row(a, u) == sdim::testing::closed_row(a, v);
        EXPECT_EQ(r.class_of[u] == r.class_of[v], twins);
        if (twins && u != v) EXPECT_TRUE(g.adjacent(u, v));  // classes are cliques
      }
    for (std::size_t c = 0; c < r.representatives.size(); ++c) {
      EXPECT_EQ(r.members(c).front(), r.representatives[c]);
      if (c > 0) EXPECT_LT(r.representatives[c - 1], r.representatives[c]);
    }
    // the quotient has no twins left
    EXPECT_EQ(reduced_graph(r.quotient).representatives.size(), r.quotient.size());
  }
}

TEST(ReducedGraph, CyclicTwinsByOrder) {
  for (std::uint64_t n : {12u, 18u, 30u, 36u}) {
    Group g = build_group("Z" + std::to_string(n));
    auto r = reduced_graph(power_graph(g));
    for (Element x = 0; x < n; ++x) {
      const auto ox = element_order(g, x);
      if (ox == n) EXPECT_EQ(r.class_of[x], r.class_of[0]) << "generator " << x;
      for (Element y = 0; y < n; ++y)
        if (element_order(g, y) == ox) EXPECT_EQ(r.class_of[x], r.class_of[y]);
    }
  }
}

TEST(ReducedGraph, ChainGeneratorsAreNotTwins) {
  for (const char* s : {"Q16", "D16", "A4", "S4", "Ab[2,4]", "E3^2"}) {
    Group g = build_group(s);
    auto fam = maximal_cyclic_subgroups(g);
    auto r = reduced_graph(power_graph(g));
    for (auto p : factorize(g.order()).primes())
      for (const auto& ca : chain_analysis(g, fam, p)) {
        std::set<std::size_t> classes;
        for (std::size_t u = ca.s_prime - 1; u < ca.chain_generators.size(); ++u)
          classes.insert(r.class_of[ca.chain_generators[u]]);
        EXPECT_EQ(classes.size(), ca.chain_generators.size() - (ca.s_prime - 1)) << s;
      }
  }
}
