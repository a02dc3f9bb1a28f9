#ifndef INDPOLY_ENGINE_HPP
#define INDPOLY_ENGINE_HPP

#include "indpoly/canonical.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace indpoly {

/// Pivot rule for the deletion recursions.
enum class Strategy {
  VertexMaxDegree,
  VertexMinDegree,
  PendantNeighborFirst,
  EdgeRecursion,
  Auto,
};

inline constexpr Strategy kAllStrategies[] = {Strategy::VertexMaxDegree, Strategy::VertexMinDegree,
                                             Strategy::PendantNeighborFirst,
                                             Strategy::EdgeRecursion, Strategy::Auto};

inline std::string_view to_string(Strategy s) {
  switch (s) {
  case Strategy::VertexMaxDegree: return "vertex-max-degree";
  case Strategy::VertexMinDegree: return "vertex-min-degree";
  case Strategy::PendantNeighborFirst: return "pendant-neighbor-first";
  case Strategy::EdgeRecursion: return "edge";
  case Strategy::Auto: return "auto";
  }
  return "?";
}

inline std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies)
    if (to_string(s) == name)
      return s;
  return std::nullopt;
}

struct ComputationStats {
  std::uint64_t recursion_nodes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t closed_form_hits = 0;
  std::uint64_t max_depth = 0;
  Strategy strategy = Strategy::Auto;
};

/// Thrown when a computation exceeds its recursion-node budget.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded() : std::runtime_error("recursion node budget exhausted") {}
};

/// Largest order accepted by the exhaustive oracles.
inline constexpr int kOracleLimit = 28;

namespace detail {

/// Exact polynomial arithmetic: the recursion computes I(G;x).
struct PolynomialAlgebra {
  using Value = Polynomial;
  Value one() const { return Polynomial::one(); }
  Value isolated() const { return {1, 1}; }
  Value edge() const { return {1, 2}; }
  Value path(int n) const { return path_poly(n); }
  Value cycle(int n) const { return cycle_poly(n); }
  Value times_x(const Value &a, std::size_t k) const { return a.shifted(k); }
};

/// Integer arithmetic at a fixed point t: the recursion computes I(G;t).
struct PointAlgebra {
  using Value = Integer;
  Integer t;
  Value one() const { return 1; }
  Value isolated() const { return 1 + t; }
  Value edge() const { return 1 + 2 * t; }
  Value path(int n) const {
    if (t == -1)
      return value_at_minus_one_path(n);
    return path_poly(n).eval(t);
  }
  Value cycle(int n) const {
    if (t == -1)
      return value_at_minus_one_cycle(n);
    return cycle_poly(n).eval(t);
  }
  Value times_x(const Value &a, std::size_t k) const {
    Integer r = a;
    for (std::size_t i = 0; i < k; ++i)
      r *= t;
    return r;
  }
};

/// Edge on a cycle (DFS non-tree edge from the smallest vertex), else the
/// smallest edge. g must have an edge.
inline Graph::Edge pick_recursion_edge(const Graph &g) {
  const int n = g.order();
  std::vector<int> parent(n, -2);
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2)
      continue;
    parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (parent[w] == -2) {
          parent[w] = u;
          stack.push_back(w);
        } else if (w != parent[u] && parent[w] != u) {
          return {std::min(u, w), std::max(u, w)};
        }
      }
    }
  }
  for (int u = 0; u < n; ++u)
    if (!g.neighbors(u).empty())
      return {u, g.neighbors(u).first()};
  throw GraphError("pick_recursion_edge: graph has no edges");
}

inline int pick_degree_pivot(const Graph &g, bool want_max) {
  int best = 0, best_deg = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    int d = g.degree(v);
    if (want_max ? d > best_deg : d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return best;
}

}  // namespace detail

/// Exact independence-polynomial engine: component splitting, closed-form
/// base cases, pivot strategies, memoization by canonical form.
///
/// The memo persists across calls on one Engine and is safe under concurrent
/// use; two threads may duplicate a computation but never disagree.
class Engine {
public:
  struct Options {
    Strategy strategy = Strategy::Auto;
    /// Components of at most this order are memoized by canonical form; 0
    /// disables the memo entirely.
    int memo_threshold = kCanonicalThreshold;
    /// Larger components are memoized by their exact labeled adjacency. Deletions
    /// keep survivors in order, so equal vertex subsets of one input collide.
    bool labeled_memo = true;
    /// Shortcut paths and cycles through their Fibonacci closed forms.
    bool closed_forms = true;
    /// Recursion levels below which the two branches run concurrently.
    int parallel_depth = 0;
    /// 0 means unlimited.
    std::uint64_t node_budget = 0;
  };

  struct PolyResult {
    Polynomial poly;
    ComputationStats stats;
  };
  struct ValueResult {
    Integer value;
    ComputationStats stats;
  };

  Engine() = default;
  explicit Engine(Options options) : options_(options) {}

  const Options &options() const { return options_; }

  PolyResult independence_poly(const Graph &g) const {
    Run<detail::PolynomialAlgebra> run{*this, {}, poly_memo_};
    Polynomial p = run.compute(g, 0);
    return {std::move(p), run.stats()};
  }

  /// I(G;t) by the same recursion in integer arithmetic.
  ValueResult evaluate(const Graph &g, const Integer &t) const {
    PointMemo &memo = point_memo(t);
    Run<detail::PointAlgebra> run{*this, detail::PointAlgebra{t}, memo};
    Integer v = run.compute(g, 0);
    return {std::move(v), run.stats()};
  }

  Integer alternating_number(const Graph &g) const { return evaluate(g, -1).value; }

  void clear_memo() {
    std::unique_lock lock(poly_memo_.mutex);
    poly_memo_.table.clear();
    std::unique_lock lock2(points_mutex_);
    points_.clear();
  }

private:
  template <class Value>
  struct Memo {
    std::shared_mutex mutex;
    std::unordered_map<std::string, Value> table;

    std::optional<Value> find(const std::string &key) {
      std::shared_lock lock(mutex);
      auto it = table.find(key);
      if (it == table.end())
        return std::nullopt;
      return it->second;
    }
    void insert(std::string key, const Value &v) {
      std::unique_lock lock(mutex);
      table.emplace(std::move(key), v);
    }
  };
  using PointMemo = Memo<Integer>;

  PointMemo &point_memo(const Integer &t) const {
    std::unique_lock lock(points_mutex_);
    for (auto &[at, memo] : points_)
      if (at == t)
        return *memo;
    points_.emplace_back(t, std::make_unique<PointMemo>());
    return *points_.back().second;
  }

  template <class Algebra>
  struct Run {
    using Value = typename Algebra::Value;

    const Engine &engine;
    Algebra alg;
    Memo<Value> &memo;
    std::atomic<std::uint64_t> nodes{0}, memo_hits{0}, closed_hits{0}, depth{0};

    ComputationStats stats() const {
      return {nodes.load(), memo_hits.load(), closed_hits.load(), depth.load(),
              engine.options_.strategy};
    }

    void enter(std::uint64_t d) {
      std::uint64_t count = ++nodes;
      if (engine.options_.node_budget && count > engine.options_.node_budget)
        throw BudgetExceeded();
      std::uint64_t seen = depth.load();
      while (d > seen && !depth.compare_exchange_weak(seen, d)) {
      }
    }

    Value compute(const Graph &g, std::uint64_t d) {
      enter(d);
      if (g.order() == 0)
        return alg.one();
      auto comps = component_sets(g);
      if (comps.size() == 1)
        return connected(g, d);
      Value acc = alg.one();
      for (VertexSet c : comps)
        acc = acc * connected(g.induced(c), d);
      return acc;
    }

    Value connected(const Graph &g, std::uint64_t d) {
      const int n = g.order();
      if (n == 1) {
        ++closed_hits;
        return alg.isolated();
      }
      if (n == 2) {
        ++closed_hits;
        return alg.edge();
      }
      if (engine.options_.closed_forms) {
        if (auto p = is_path(g)) {
          ++closed_hits;
          return alg.path(*p);
        }
        if (auto c = is_cycle(g)) {
          ++closed_hits;
          return alg.cycle(*c);
        }
      }
      std::string key;
      const int threshold = engine.options_.memo_threshold;
      if (threshold > 0 && n <= threshold)
        key = 'C' + canonical_form(g, threshold).key;
      else if (threshold > 0 && engine.options_.labeled_memo)
        key = 'L' + detail::adjacency_key(g);
      if (!key.empty()) {
        if (auto hit = memo.find(key)) {
          ++memo_hits;
          return *hit;
        }
      }
      Value v = branch(g, d);
      if (!key.empty())
        memo.insert(std::move(key), v);
      return v;
    }

    /// Evaluates both sides, concurrently near the root when configured.
    std::pair<Value, Value> both(const Graph &a, const Graph &b, std::uint64_t d) {
      if (d < static_cast<std::uint64_t>(engine.options_.parallel_depth)) {
        auto left = std::async(std::launch::async, [&] { return compute(a, d + 1); });
        Value right = compute(b, d + 1);
        return {left.get(), std::move(right)};
      }
      Value left = compute(a, d + 1);
      return {std::move(left), compute(b, d + 1)};
    }

    Value branch(const Graph &g, std::uint64_t d) {
      Strategy s = engine.options_.strategy;
      VertexSet pendants = pendant_vertices(g);
      if (s == Strategy::Auto)
        s = pendants.empty() ? Strategy::VertexMaxDegree : Strategy::PendantNeighborFirst;

      switch (s) {
      case Strategy::PendantNeighborFirst:
        if (!pendants.empty()) {
          // I(G) = (1+x) I(G-{u,v}) + x I(G-N[v]) for pendant u with neighbor v.
          int u = pendants.first();
          int v = g.neighbors(u).first();
          auto [rest, far] = both(g.delete_vertices(VertexSet{u, v}),
                                  g.delete_closed_neighborhood(v), d);
          return alg.isolated() * rest + alg.times_x(far, 1);
        }
        [[fallthrough]];
      case Strategy::Auto:
      case Strategy::VertexMaxDegree:
      case Strategy::VertexMinDegree: {
        // I(G) = I(G-w) + x I(G-N[w])
        int w = detail::pick_degree_pivot(g, s != Strategy::VertexMinDegree);
        auto [without, far] =
            both(g.delete_vertices(VertexSet::singleton(w)), g.delete_closed_neighborhood(w), d);
        return without + alg.times_x(far, 1);
      }
      case Strategy::EdgeRecursion: {
        // I(G) = I(G-uv) - x^2 I(G - N(u) ∪ N(v))
        auto [u, v] = detail::pick_recursion_edge(g);
        auto [cut, far] = both(g.delete_edge(u, v), g.delete_edge_neighborhoods(u, v), d);
        return cut - alg.times_x(far, 2);
      }
      }
      throw std::logic_error("unreachable strategy");
    }
  };

  Options options_;
  mutable Memo<Polynomial> poly_memo_;
  mutable std::mutex points_mutex_;
  mutable std::vector<std::pair<Integer, std::unique_ptr<PointMemo>>> points_;
};

inline Engine::PolyResult independence_poly(const Graph &g, Strategy strategy = Strategy::Auto) {
  Engine::Options opts;
  opts.strategy = strategy;
  return Engine(opts).independence_poly(g);
}

inline Integer alternating_number(const Graph &g, Strategy strategy = Strategy::Auto) {
  Engine::Options opts;
  opts.strategy = strategy;
  return Engine(opts).alternating_number(g);
}

/// Stable sets counted by size through plain backtracking; the definitional oracle.
inline Polynomial brute_force_poly(const Graph &g) {
  if (g.order() > kOracleLimit)
    throw GraphError("brute_force_poly: order " + std::to_string(g.order()) +
                     " exceeds oracle limit " + std::to_string(kOracleLimit));
  std::vector<std::uint64_t> counts(g.order() + 1, 0);
  auto rec = [&](auto &self, VertexSet candidates, int size) -> void {
    ++counts[size];
    while (!candidates.empty()) {
      int v = candidates.first();
      candidates.erase(v);
      self(self, candidates - g.neighbors(v), size + 1);
    }
  };
  rec(rec, g.vertices(), 0);
  std::vector<Integer> cs;
  for (auto c : counts)
    cs.emplace_back(static_cast<unsigned long>(c));
  return Polynomial(std::move(cs));
}

/// Stability number by branch and bound, without building the polynomial.
inline int stability_number(const Graph &g) {
  int best = 0;
  auto rec = [&](auto &self, VertexSet cand, int size) -> void {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + cand.size() <= best)
      return;
    int pick = -1, pick_deg = 0, low = -1, low_deg = kMaxVertices + 1;
    for (int v : cand) {
      int d = (g.neighbors(v) & cand).size();
      if (d < low_deg) {
        low = v;
        low_deg = d;
      }
      if (pick < 0 || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    // a vertex of degree <= 1 lies in some maximum stable set
    if (low_deg <= 1) {
      self(self, cand - g.closed_neighborhood(low), size + 1);
      return;
    }
    self(self, cand - g.closed_neighborhood(pick), size + 1);
    cand.erase(pick);
    self(self, cand, size);
  };
  rec(rec, g.vertices(), 0);
  return best;
}

struct EvenOddCounts {
  Integer even;
  Integer odd;
};

/// Stable sets of even and odd cardinality.
inline EvenOddCounts even_odd_counts(const Polynomial &ip) {
  EvenOddCounts out{0, 0};
  const auto &cs = ip.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k)
    (k % 2 == 0 ? out.even : out.odd) += cs[k];
  return out;
}

inline EvenOddCounts even_odd_counts(const Graph &g) {
  return even_odd_counts(independence_poly(g).poly);
}

}  // namespace indpoly

#endif
