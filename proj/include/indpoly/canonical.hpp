#ifndef INDPOLY_CANONICAL_HPP
#define INDPOLY_CANONICAL_HPP

#include "indpoly/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace indpoly {

/// Default largest order canonicalized for memoization and dedup.
inline constexpr int kCanonicalThreshold = 10;

/// Isomorphism-invariant key: one byte of n, then the upper-triangle adjacency
/// bits of the canonically relabeled graph in column order (0,1),(0,2),(1,2),...
struct CanonicalForm {
  std::string key;

  bool operator==(const CanonicalForm &) const = default;
  auto operator<=>(const CanonicalForm &) const = default;
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

/// Split cells by neighbor counts into every cell until stable. Sub-cells are
/// ordered by their count signature, so the result is label-independent.
inline void refine(const Graph &g, Cells &cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cell_of(g.order());
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c])
        cell_of[v] = static_cast<int>(c);
    Cells next;
    next.reserve(g.order());
    for (const auto &cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<int> sig(cells.size());
        for (int w : g.neighbors(v))
          ++sig[cell_of[w]];
        groups[std::move(sig)].push_back(v);
      }
      if (groups.size() > 1)
        changed = true;
      for (auto &[sig, members] : groups)
        next.push_back(std::move(members));
    }
    cells = std::move(next);
  }
}

inline std::string adjacency_key(const Graph &g) {
  const int n = g.order();
  std::string key(1, static_cast<char>(n));
  unsigned char byte = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      byte = static_cast<unsigned char>((byte << 1) | (g.has_edge(i, j) ? 1 : 0));
      if (++nbits == 8) {
        key.push_back(static_cast<char>(byte));
        byte = 0;
        nbits = 0;
      }
    }
  if (nbits)
    key.push_back(static_cast<char>(byte << (8 - nbits)));
  return key;
}

struct CanonicalSearch {
  const Graph &g;
  std::string best_key;
  std::vector<int> best_perm;

  void run(Cells cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto &c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> perm(g.order());
      for (std::size_t pos = 0; pos < cells.size(); ++pos)
        perm[cells[pos][0]] = static_cast<int>(pos);
      std::string key = adjacency_key(g.permuted(perm));
      if (best_perm.empty() || key < best_key) {
        best_key = std::move(key);
        best_perm = std::move(perm);
      }
      return;
    }
    const std::size_t at = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : cells[at]) {
      // swapping twins is an automorphism fixing the partition: same subtree
      bool twin = std::any_of(tried.begin(), tried.end(), [&](int w) {
        VertexSet pair{v, w};
        return (g.neighbors(v) - pair) == (g.neighbors(w) - pair);
      });
      if (twin)
        continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + at);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cells[at])
        if (w != v)
          rest.push_back(w);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + at + 1, cells.end());
      run(std::move(child));
    }
  }
};

}  // namespace detail

/// Permutation perm with perm[v] = canonical position of v. Individualization
/// and refinement over the degree partition; only twin automorphisms are pruned.
inline std::vector<int> canonical_labeling(const Graph &g, int max_n = kCanonicalThreshold) {
  if (g.order() > max_n)
    throw GraphError("canonical_form: order " + std::to_string(g.order()) +
                     " exceeds threshold " + std::to_string(max_n));
  if (g.order() == 0)
    return {};
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < g.order(); ++v)
    by_degree[g.degree(v)].push_back(v);
  detail::Cells cells;
  for (auto &[d, members] : by_degree)
    cells.push_back(std::move(members));
  detail::CanonicalSearch search{g, {}, {}};
  search.run(std::move(cells));
  return search.best_perm;
}

inline Graph canonical_graph(const Graph &g, int max_n = kCanonicalThreshold) {
  return g.permuted(canonical_labeling(g, max_n));
}

inline CanonicalForm canonical_form(const Graph &g, int max_n = kCanonicalThreshold) {
  return {detail::adjacency_key(canonical_graph(g, max_n))};
}

}  // namespace indpoly

template <>
struct std::hash<indpoly::CanonicalForm> {
  std::size_t operator()(const indpoly::CanonicalForm &c) const noexcept {
    return std::hash<std::string>{}(c.key);
  }
};

#endif
