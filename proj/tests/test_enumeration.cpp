#include "indpoly/analysis.hpp"
#include "indpoly/canonical.hpp"
#include "indpoly/enumeration.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace indpoly;

namespace {

// Every labeled tree on n vertices from its Pruefer sequence, reduced to isomorphism classes.
std::size_t trees_by_pruefer(int n) {
  if (n <= 2)
    return 1;
  std::set<CanonicalForm> classes;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq)
      ++degree[x];
    std::vector<Graph::Edge> edges;
    for (int x : seq)
      for (int leaf = 0; leaf < n; ++leaf)
        if (degree[leaf] == 1) {
          edges.emplace_back(leaf, x);
          --degree[leaf];
          --degree[x];
          break;
        }
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) {
        if (u < 0)
          u = v;
        else
          edges.emplace_back(u, v);
      }
    classes.insert(canonical_form(Graph::from_edge_list(n, edges), 16));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n)
      seq[i++] = 0;
    if (i == n - 2)
      break;
  }
  return classes.size();
}

// Connected graphs on n vertices by scanning every edge subset.
std::set<CanonicalForm> connected_by_subsets(int n) {
  std::vector<Graph::Edge> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      slots.emplace_back(u, v);
  std::set<CanonicalForm> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Graph::Edge> es;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1)
        es.push_back(slots[i]);
    Graph g = Graph::from_edge_list(n, es);
    if (is_connected(g))
      out.insert(canonical_form(g));
  }
  return out;
}

}  // namespace

TEST(Enumeration, FreeTreeCounts) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (int n = 1; n <= 14; ++n)
    EXPECT_EQ(free_trees(n).size(), expected[n - 1]) << n;
}

TEST(Enumeration, FreeTreesMatchPrueferClasses) {
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(free_trees(n).size(), trees_by_pruefer(n)) << n;
}

TEST(Enumeration, FreeTreesAreDistinctTrees) {
  for (int n = 1; n <= 11; ++n) {
    std::set<CanonicalForm> seen;
    for (const Graph &t : free_trees(n)) {
      EXPECT_EQ(t.order(), n);
      EXPECT_TRUE(is_connected(t));
      EXPECT_EQ(t.size(), n - 1);
      seen.insert(canonical_form(t, 16));
    }
    EXPECT_EQ(seen.size(), free_trees(n).size());
  }
}

TEST(Enumeration, ConnectedGraphsMatchSubsetScan) {
  for (int n = 1; n <= 5; ++n) {
    std::set<CanonicalForm> got;
    for (const Graph &g : connected_graphs(n))
      got.insert(canonical_form(g));
    EXPECT_EQ(got, connected_by_subsets(n)) << n;
    EXPECT_EQ(connected_graphs(n).size(), got.size());
  }
}

TEST(Enumeration, ConnectedGraphCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(connected_graphs(n).size(), expected[n - 1]) << n;
}

TEST(Enumeration, FilterByCyclomaticNumber) {
  // unicyclic graphs on 5 vertices: 5
  EXPECT_EQ(connected_graphs_with_nu(5, 1).size(), 5u);
  EXPECT_EQ(connected_graphs_with_nu(6, 0).size(), 6u);
  EXPECT_THROW(connected_graphs(9), GraphError);
  EXPECT_THROW(connected_graphs(0), GraphError);
}
