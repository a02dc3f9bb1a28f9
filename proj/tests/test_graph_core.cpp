#include "indpoly/canonical.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace indpoly;

TEST(VertexSet, BasicOperations) {
  VertexSet s{1, 3, 70, 150};
  EXPECT_EQ(s.size(), 4);
  EXPECT_TRUE(s.contains(70));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.first(), 1);
  EXPECT_EQ(s.count_below(71), 3);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{1, 3, 70, 150}));

  VertexSet t{3, 4, 150};
  EXPECT_EQ((s & t), (VertexSet{3, 150}));
  EXPECT_EQ((s | t).size(), 5);
  EXPECT_EQ((s - t), (VertexSet{1, 70}));
  EXPECT_TRUE(VertexSet{}.empty());
  EXPECT_EQ(VertexSet::range(130).size(), 130);
}

TEST(VertexSet, IterationMatchesToVector) {
  VertexSet s{0, 63, 64, 127, 128, kMaxVertices - 1};
  std::vector<int> seen(s.begin(), s.end());
  EXPECT_EQ(seen, s.to_vector());
}

TEST(VertexSet, OrderingIsTotal) {
  VertexSet a{1}, b{64}, c{0, 1};
  EXPECT_LT(a, b);
  EXPECT_LT(a, c);
  EXPECT_EQ(a <=> a, std::strong_ordering::equal);
}

TEST(Graph, ConstructionAndQueries) {
  Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 3));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.neighbors(2), (VertexSet{1, 3}));
  EXPECT_EQ(g.closed_neighborhood(0), (VertexSet{0, 1}));
  EXPECT_EQ(g, path_graph(4));
}

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph::from_edge_list(3, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(kMaxVertices + 1), GraphError);
  Graph g = path_graph(3);
  EXPECT_THROW(g.delete_edge(0, 2), GraphError);
  EXPECT_THROW(g.neighbors(5), GraphError);
}

TEST(Graph, DeletionsRelabelInOrder) {
  Graph p5 = path_graph(5);
  Graph split = p5.delete_vertices(VertexSet{2});
  EXPECT_EQ(split, Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(p5.delete_closed_neighborhood(0), path_graph(3));
  EXPECT_EQ(p5.delete_edge(1, 2), Graph::from_edge_list(5, {{0, 1}, {2, 3}, {3, 4}}));
  // removes N[1] and N[2]
  EXPECT_EQ(p5.delete_edge_neighborhoods(1, 2), Graph(1));
  EXPECT_EQ(path_graph(3).with_edge(0, 2), cycle_graph(3));
}

TEST(Graph, Components) {
  Graph g = Graph::from_edge_list(6, {{0, 1}, {2, 3}, {3, 4}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_TRUE(is_connected(cycle_graph(9)));
  EXPECT_EQ(pendant_vertices(g), (VertexSet{0, 1, 2, 4}));
}

TEST(Graph, Distances) {
  Graph c = cycle_graph(8);
  EXPECT_EQ(distance(c, 0, 4), 4);
  EXPECT_EQ(distance(c, 1, 7), 2);
  EXPECT_FALSE(distance(Graph(2), 0, 1).has_value());
}

TEST(Graph, RecognizesPathsAndCycles) {
  EXPECT_EQ(is_path(path_graph(6)), 6);
  EXPECT_EQ(is_cycle(cycle_graph(5)), 5);
  EXPECT_FALSE(is_path(cycle_graph(5)).has_value());
  EXPECT_FALSE(is_cycle(path_graph(5)).has_value());
  EXPECT_FALSE(is_path(star_graph(3)).has_value());
  EXPECT_EQ(complete_graph(5).size(), 10);
  EXPECT_EQ(star_graph(4).order(), 5);
}

TEST(Canonical, InvariantUnderRelabeling) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(rng, 1 + static_cast<int>(uniform_below(rng, 10)), 1, 3);
    Graph h = random_relabel(rng, g);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  // the two 3-edge trees on 4 vertices, and C6 versus two triangles
  EXPECT_NE(canonical_form(path_graph(4)), canonical_form(star_graph(3)));
  Graph two_triangles = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NE(canonical_form(cycle_graph(6)), canonical_form(two_triangles));
}

TEST(Canonical, CountsIsomorphismClassesOfSmallGraphs) {
  // brute force over all labeled graphs on 5 vertices: 34 classes
  std::vector<Graph::Edge> slots;
  for (int v = 1; v < 5; ++v)
    for (int u = 0; u < v; ++u)
      slots.emplace_back(u, v);
  std::set<CanonicalForm> classes;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Graph::Edge> es;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1)
        es.push_back(slots[i]);
    classes.insert(canonical_form(Graph::from_edge_list(5, es)));
  }
  EXPECT_EQ(classes.size(), 34u);
}

TEST(Canonical, LabelingIsAPermutation) {
  Rng rng(3);
  Graph g = random_graph(rng, 9, 1, 2);
  auto perm = canonical_labeling(g);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 9; ++i)
    EXPECT_EQ(sorted[i], i);
  EXPECT_EQ(canonical_graph(g), canonical_graph(random_relabel(rng, g)));
}

TEST(Random, DerivedSeedsAreStable) {
  EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 2, 4));
  Rng a(derive_seed(5, 0, 0)), b(derive_seed(5, 0, 0));
  EXPECT_EQ(random_graph(a, 12, 1, 2), random_graph(b, 12, 1, 2));
}

TEST(Random, GeneratorsRespectShape) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Graph t = random_tree(rng, 15);
    EXPECT_TRUE(is_connected(t));
    EXPECT_EQ(t.size(), 14);
    Graph c = random_connected(rng, 10, 3);
    EXPECT_TRUE(is_connected(c));
    EXPECT_EQ(c.size(), 12);
  }
}
