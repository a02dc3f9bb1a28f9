#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"
#include "indpoly/random.hpp"

#include <gtest/gtest.h>

using namespace indpoly;

namespace {

// Sum over all vertex subsets of x^|S| for stable S; independent of the engine's recursion.
Polynomial subset_oracle(const Graph &g) {
  const int n = g.order();
  std::vector<Integer> counts(n + 1, 0);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool stable = true;
    for (auto [u, v] : g.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) {
        stable = false;
        break;
      }
    if (stable)
      counts[__builtin_popcountl(mask)] += 1;
  }
  return Polynomial(counts);
}

}  // namespace

TEST(Engine, EmptyAndTinyGraphs) {
  EXPECT_EQ(independence_poly(Graph()).poly, Polynomial::one());
  EXPECT_EQ(independence_poly(Graph(1)).poly, (Polynomial{1, 1}));
  EXPECT_EQ(independence_poly(Graph(3)).poly, (Polynomial{1, 3, 3, 1}));
  EXPECT_EQ(independence_poly(complete_graph(2)).poly, (Polynomial{1, 2}));
}

TEST(Engine, AllStrategiesMatchSubsetOracle) {
  Rng rng(2024);
  for (int i = 0; i < 120; ++i) {
    int n = uniform_int(rng, 0, 12);
    Graph g = random_graph(rng, n, uniform_int(rng, 1, 4), 5);
    Polynomial expected = subset_oracle(g);
    EXPECT_EQ(brute_force_poly(g), expected);
    for (Strategy s : kAllStrategies)
      EXPECT_EQ(independence_poly(g, s).poly, expected) << to_string(s) << " n=" << n;
  }
}

TEST(Engine, OptionsDoNotChangeResults) {
  Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected(rng, uniform_int(rng, 8, 22), uniform_int(rng, 0, 6));
    Polynomial expected = independence_poly(g).poly;
    for (int threshold : {0, 4, 10})
      for (bool closed : {false, true})
        for (int par : {0, 2}) {
          Engine::Options o;
          o.memo_threshold = threshold;
          o.closed_forms = closed;
          o.parallel_depth = par;
          o.labeled_memo = threshold != 4;
          EXPECT_EQ(Engine(o).independence_poly(g).poly, expected);
        }
  }
}

TEST(Engine, EvaluateAgreesWithPolynomial) {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected(rng, uniform_int(rng, 3, 18), uniform_int(rng, 0, 5));
    Polynomial p = independence_poly(g).poly;
    Engine e;
    for (long t : {-3L, -1L, 0L, 1L, 2L})
      EXPECT_EQ(e.evaluate(g, t).value, p.eval(t));
    EXPECT_EQ(e.alternating_number(g), p.eval(-1));
  }
}

TEST(Engine, ClosedFormsShortcutPathsAndCycles) {
  auto r = independence_poly(cycle_graph(60));
  EXPECT_EQ(r.poly, cycle_poly(60));
  EXPECT_GE(r.stats.closed_form_hits, 1u);
  EXPECT_EQ(alternating_number(path_graph(150)), value_at_minus_one_path(150));
}

TEST(Engine, StatsReportStrategy) {
  auto r = independence_poly(star_graph(5), Strategy::EdgeRecursion);
  EXPECT_EQ(r.stats.strategy, Strategy::EdgeRecursion);
  EXPECT_GE(r.stats.recursion_nodes, 1u);
}

TEST(Engine, StrategyNamesRoundTrip) {
  for (Strategy s : kAllStrategies)
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_FALSE(parse_strategy("bogus").has_value());
}

TEST(Engine, NodeBudgetIsEnforced) {
  Engine::Options o;
  o.node_budget = 5;
  o.memo_threshold = 0;
  o.closed_forms = false;
  Rng rng(1);
  Graph g = random_graph(rng, 20, 1, 2);
  EXPECT_THROW(Engine(o).independence_poly(g), BudgetExceeded);
}

TEST(Engine, MemoIsReusedAcrossCalls) {
  Engine e;
  Graph g = w_star(6);
  auto first = e.independence_poly(g);
  auto second = e.independence_poly(g);
  EXPECT_EQ(first.poly, second.poly);
  EXPECT_LT(second.stats.recursion_nodes, first.stats.recursion_nodes + 1);
  e.clear_memo();
  EXPECT_EQ(e.independence_poly(g).poly, first.poly);
}

TEST(Engine, LargeSparseGraphs) {
  // union of 40 triangles: (1+3x)^40
  std::vector<Graph> parts(40, cycle_graph(3));
  Graph g = disjoint_union(parts);
  EXPECT_EQ(independence_poly(g).poly, (Polynomial{1, 3}).pow(40));
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, 40);
  EXPECT_EQ(alternating_number(g), expected);
}

TEST(Engine, OracleGuard) {
  EXPECT_THROW(brute_force_poly(Graph(kOracleLimit + 1)), GraphError);
}

TEST(Engine, StabilityAndParityCounts) {
  EXPECT_EQ(stability_number(cycle_graph(7)), 3);
  EXPECT_EQ(stability_number(star_graph(6)), 6);
  EXPECT_EQ(stability_number(complete_graph(6)), 1);
  Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(rng, uniform_int(rng, 1, 12), 1, 3);
    EXPECT_EQ(stability_number(g), brute_force_poly(g).degree());
    auto [even, odd] = even_odd_counts(g);
    EXPECT_EQ(even - odd, alternating_number(g));
  }
}
