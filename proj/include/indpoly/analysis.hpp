#ifndef INDPOLY_ANALYSIS_HPP
#define INDPOLY_ANALYSIS_HPP

#include "indpoly/engine.hpp"
#include "indpoly/graph.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace indpoly {

/// |E| - |V| + (number of components)
inline int cyclomatic_number(const Graph &g) {
  return g.size() - g.order() + static_cast<int>(component_sets(g).size());
}

/// Shortest cycle length by BFS from every vertex; nullopt for forests.
inline std::optional<int> girth(const Graph &g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best)
            best = len;
        }
      }
    }
  }
  return best;
}

/// All inclusion-maximal stable sets (Bron-Kerbosch with pivoting on the
/// complement), sorted by bit pattern.
inline std::vector<VertexSet> maximal_stable_sets(const Graph &g) {
  if (g.order() > kOracleLimit)
    throw GraphError("maximal_stable_sets: order " + std::to_string(g.order()) +
                     " exceeds enumeration limit " + std::to_string(kOracleLimit));
  std::vector<VertexSet> out;
  // candidates and excluded are both non-adjacent to every member of `chosen`
  auto rec = [&](auto &self, VertexSet chosen, VertexSet candidates, VertexSet excluded) -> void {
    if (candidates.empty()) {
      if (excluded.empty())
        out.push_back(chosen);
      return;
    }
    int pivot = -1, pivot_score = -1;
    for (int u : candidates | excluded) {
      int score = (candidates - g.closed_neighborhood(u)).size();
      if (score > pivot_score) {
        pivot = u;
        pivot_score = score;
      }
    }
    for (int v : candidates & g.closed_neighborhood(pivot)) {
      VertexSet keep = VertexSet::singleton(v) | g.neighbors(v);
      self(self, chosen | VertexSet::singleton(v), candidates - keep, excluded - keep);
      candidates.erase(v);
      excluded.insert(v);
    }
  };
  rec(rec, {}, g.vertices(), {});
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_well_covered(const Graph &g) {
  auto sets = maximal_stable_sets(g);
  return std::all_of(sets.begin(), sets.end(),
                     [&](VertexSet s) { return s.size() == sets.front().size(); });
}

/// Well-covered, no isolated vertices, and n = 2 alpha.
inline bool is_very_well_covered(const Graph &g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      return false;
  return g.order() == 2 * stability_number(g) && is_well_covered(g);
}

/// H when g = H o K1, i.e. every vertex is matched with exactly one pendant
/// partner. A K2 component contributes its smaller label to H.
inline std::optional<Graph> corona_decompose(const Graph &g) {
  const int n = g.order();
  if (n % 2 != 0)
    return std::nullopt;
  VertexSet base, leaves;
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != 1)
      continue;
    int v = g.neighbors(u).first();
    if (g.degree(v) == 1) {
      base.insert(std::min(u, v));
      leaves.insert(std::max(u, v));
    } else {
      if (base.contains(v))
        return std::nullopt;  // v already has a pendant
      base.insert(v);
      leaves.insert(u);
    }
  }
  if (!(base & leaves).empty() || (base | leaves) != g.vertices() || base.size() != leaves.size())
    return std::nullopt;
  return g.induced(base);
}

/// G - N[v] is well-covered; requires g well-covered and not complete.
inline bool well_covered_residual_check(const Graph &g, int v) {
  const int n = g.order();
  if (g.size() == n * (n - 1) / 2)
    throw GraphError("well_covered_residual_check: graph is complete");
  if (!is_well_covered(g))
    throw GraphError("well_covered_residual_check: graph is not well-covered");
  return is_well_covered(g.delete_closed_neighborhood(v));
}

/// Dependent (non-stable) subsets counted by parity of size.
struct DependentBalance {
  Integer even;
  Integer odd;
};

inline DependentBalance dependent_set_balance(const Graph &g) {
  const int n = g.order();
  auto [f0, f1] = even_odd_counts(g);
  Integer even_subsets = 1, odd_subsets = 0;
  if (n >= 1) {
    mpz_ui_pow_ui(even_subsets.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    odd_subsets = even_subsets;
  }
  return {even_subsets - f0, odd_subsets - f1};
}

struct GraphProfile {
  int n = 0;
  int edge_count = 0;
  int component_count = 0;
  int cyclomatic = 0;
  std::optional<int> girth;
  int alpha = 0;
  bool well_covered = false;
  bool very_well_covered = false;
  std::optional<Graph> corona_base;

  /// Stable "key: value" lines.
  std::string render() const {
    std::ostringstream os;
    os << "vertices: " << n << '\n'
       << "edges: " << edge_count << '\n'
       << "components: " << component_count << '\n'
       << "cyclomatic: " << cyclomatic << '\n'
       << "girth: " << (girth ? std::to_string(*girth) : std::string("inf")) << '\n'
       << "alpha: " << alpha << '\n'
       << "well-covered: " << (well_covered ? "yes" : "no") << '\n'
       << "very-well-covered: " << (very_well_covered ? "yes" : "no") << '\n'
       << "corona-base: ";
    if (corona_base)
      os << "n=" << corona_base->order() << " m=" << corona_base->size();
    else
      os << "none";
    os << '\n';
    return os.str();
  }
};

inline GraphProfile profile(const Graph &g) {
  GraphProfile p;
  p.n = g.order();
  p.edge_count = g.size();
  p.component_count = static_cast<int>(component_sets(g).size());
  p.cyclomatic = cyclomatic_number(g);
  p.girth = girth(g);
  p.alpha = stability_number(g);
  p.well_covered = is_well_covered(g);
  p.very_well_covered = p.well_covered && is_very_well_covered(g);
  p.corona_base = corona_decompose(g);
  return p;
}

}  // namespace indpoly

#endif
