#ifndef INDPOLY_ENUMERATION_HPP
#define INDPOLY_ENUMERATION_HPP

#include "indpoly/analysis.hpp"
#include "indpoly/canonical.hpp"
#include "indpoly/graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace indpoly {

inline constexpr int kMaxTreeOrder = 16;
inline constexpr int kMaxConnectedOrder = 8;

/// Free trees on n vertices, each exactly once, generated lazily from level
/// sequences (Wright-Richmond-Odlyzko-McKay successor rule over the
/// Beyer-Hedetniemi rooted-tree successor).
class FreeTreeGenerator {
public:
  explicit FreeTreeGenerator(int n) : n_(n) {
    if (n < 1 || n > kMaxTreeOrder)
      throw GraphError("free_trees: n must be in 1.." + std::to_string(kMaxTreeOrder));
    if (n >= 2) {
      for (int i = 0; i <= n / 2; ++i)
        layout_.push_back(i);
      for (int i = 1; i < (n + 1) / 2; ++i)
        layout_.push_back(i);
    }
  }

  std::optional<Graph> next() {
    if (n_ == 1) {
      if (done_)
        return std::nullopt;
      done_ = true;
      return Graph(1);
    }
    if (done_)
      return std::nullopt;
    auto candidate = next_tree(layout_);
    if (!candidate) {
      done_ = true;
      return std::nullopt;
    }
    Graph tree = to_graph(*candidate);
    auto succ = next_rooted(*candidate, std::nullopt);
    if (succ)
      layout_ = std::move(*succ);
    else
      done_ = true;
    return tree;
  }

private:
  using Layout = std::vector<int>;

  static std::optional<Layout> next_rooted(const Layout &prev, std::optional<std::size_t> start) {
    std::size_t p;
    if (start) {
      p = *start;
    } else {
      p = prev.size() - 1;
      while (prev[p] == 1)
        --p;
    }
    if (p == 0)
      return std::nullopt;
    std::size_t q = p - 1;
    while (prev[q] != prev[p] - 1)
      --q;
    Layout out = prev;
    for (std::size_t i = p; i < out.size(); ++i)
      out[i] = out[i - p + q];
    return out;
  }

  /// Left subtree of the root (levels shifted down) and the remainder.
  static std::pair<Layout, Layout> split(const Layout &layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      if (layout[i] != 1)
        continue;
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
    Layout left, rest{0};
    for (std::size_t i = 1; i < m; ++i)
      left.push_back(layout[i] - 1);
    for (std::size_t i = m; i < layout.size(); ++i)
      rest.push_back(layout[i]);
    return {left, rest};
  }

  /// Advance to the next level sequence whose root is a centre; nullopt past the end.
  static std::optional<Layout> next_tree(Layout candidate) {
    while (true) {
      auto [left, rest] = split(candidate);
      int left_h = *std::max_element(left.begin(), left.end());
      int rest_h = *std::max_element(rest.begin(), rest.end());
      bool valid = rest_h >= left_h;
      if (valid && rest_h == left_h) {
        if (left.size() > rest.size())
          valid = false;
        else if (left.size() == rest.size() && left > rest)
          valid = false;
      }
      if (valid)
        return candidate;
      std::size_t p = left.size();
      auto succ = next_rooted(candidate, p);
      if (!succ)
        return std::nullopt;
      if (candidate[p] > 2) {
        auto [new_left, new_rest] = split(*succ);
        int h = *std::max_element(new_left.begin(), new_left.end());
        std::size_t len = static_cast<std::size_t>(h) + 1;
        for (std::size_t i = 0; i < len; ++i)
          (*succ)[succ->size() - len + i] = static_cast<int>(i) + 1;
      }
      candidate = std::move(*succ);
    }
  }

  static Graph to_graph(const Layout &layout) {
    std::vector<Graph::Edge> edges;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
      while (!stack.empty() && layout[stack.back()] >= layout[i])
        stack.pop_back();
      if (!stack.empty())
        edges.emplace_back(stack.back(), i);
      stack.push_back(i);
    }
    return Graph::from_edge_list(static_cast<int>(layout.size()), edges);
  }

  int n_;
  Layout layout_;
  bool done_ = false;
};

inline std::vector<Graph> free_trees(int n) {
  std::vector<Graph> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next())
    out.push_back(std::move(*t));
  return out;
}

/// Every connected graph on n <= 8 vertices exactly once, as its canonical
/// relabeling, sorted by canonical key. Built by adding a vertex with every
/// nonempty neighborhood to each connected graph on n-1 vertices (removing a
/// non-cut vertex inverts this, so nothing is missed) and deduplicating.
inline std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > kMaxConnectedOrder)
    throw GraphError("connected_graphs: n must be in 1.." + std::to_string(kMaxConnectedOrder));
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> seen;
    for (const Graph &g : level) {
      const int m = g.order();
      for (VertexSet::Word mask = 1; mask < (VertexSet::Word{1} << m); ++mask) {
        Graph h = g.with_vertices(1);
        for (int v : VertexSet(mask))
          h = h.with_edge(v, m);
        auto perm = canonical_labeling(h, kMaxConnectedOrder);
        Graph c = h.permuted(perm);
        seen.try_emplace(detail::adjacency_key(c), c);
      }
    }
    level.clear();
    for (auto &[key, g] : seen)
      level.push_back(std::move(g));
  }
  return level;
}

inline std::vector<Graph> connected_graphs_with_nu(int n, int nu) {
  std::vector<Graph> out;
  for (Graph &g : connected_graphs(n))
    if (cyclomatic_number(g) == nu)
      out.push_back(std::move(g));
  return out;
}

}  // namespace indpoly

#endif
