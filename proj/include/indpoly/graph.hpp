#ifndef INDPOLY_GRAPH_HPP
#define INDPOLY_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indpoly {

#ifndef INDPOLY_MAX_VERTICES
#define INDPOLY_MAX_VERTICES 192
#endif

/// Vertex cap; bit-set rows use ceil(cap / 64) words.
inline constexpr int kMaxVertices = INDPOLY_MAX_VERTICES;

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A set of vertices below kMaxVertices stored as a fixed array of bit words.
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr int kWords = (kMaxVertices + 63) / 64;

  constexpr VertexSet() = default;
  /// Members are the set bits of `low` (vertices 0..63).
  constexpr explicit VertexSet(Word low) { w_[0] = low; }
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs)
      insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    VertexSet s;
    for (int i = 0; i < kWords; ++i) {
      int lo = 64 * i;
      if (n >= lo + 64)
        s.w_[i] = ~Word{0};
      else if (n > lo)
        s.w_[i] = (Word{1} << (n - lo)) - 1;
    }
    return s;
  }
  static constexpr VertexSet singleton(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  constexpr bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
  constexpr bool empty() const {
    for (Word x : w_)
      if (x)
        return false;
    return true;
  }
  constexpr int size() const {
    int c = 0;
    for (Word x : w_)
      c += std::popcount(x);
    return c;
  }
  /// Smallest member; kWords * 64 on the empty set.
  constexpr int first() const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i])
        return 64 * i + std::countr_zero(w_[i]);
    return 64 * kWords;
  }
  /// Members strictly below v.
  constexpr int count_below(int v) const {
    int c = 0;
    for (int i = 0; i < (v >> 6); ++i)
      c += std::popcount(w_[i]);
    if (v & 63)
      c += std::popcount(w_[v >> 6] & ((Word{1} << (v & 63)) - 1));
    return c;
  }

  constexpr void insert(int v) { w_[v >> 6] |= Word{1} << (v & 63); }
  constexpr void erase(int v) { w_[v >> 6] &= ~(Word{1} << (v & 63)); }

  constexpr VertexSet operator|(VertexSet o) const { return o |= *this; }
  constexpr VertexSet operator&(VertexSet o) const { return o &= *this; }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const {
    VertexSet r = *this;
    return r -= o;
  }
  constexpr VertexSet &operator|=(VertexSet o) {
    for (int i = 0; i < kWords; ++i)
      w_[i] |= o.w_[i];
    return *this;
  }
  constexpr VertexSet &operator&=(VertexSet o) {
    for (int i = 0; i < kWords; ++i)
      w_[i] &= o.w_[i];
    return *this;
  }
  constexpr VertexSet &operator-=(VertexSet o) {
    for (int i = 0; i < kWords; ++i)
      w_[i] &= ~o.w_[i];
    return *this;
  }
  constexpr bool operator==(const VertexSet &) const = default;
  /// Orders by the members read as a binary number (highest vertex most significant).
  constexpr std::strong_ordering operator<=>(const VertexSet &o) const {
    for (int i = kWords - 1; i >= 0; --i)
      if (w_[i] != o.w_[i])
        return w_[i] <=> o.w_[i];
    return std::strong_ordering::equal;
  }

  class iterator {
  public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(const std::array<Word, kWords> &w) : w_(w) { advance(); }
    constexpr int operator*() const { return v_; }
    constexpr iterator &operator++() {
      w_[v_ >> 6] &= w_[v_ >> 6] - 1;
      advance();
      return *this;
    }
    constexpr iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    constexpr bool operator==(const iterator &o) const { return v_ == o.v_; }

  private:
    constexpr void advance() {
      for (int i = v_ < 0 ? 0 : v_ >> 6; i < kWords; ++i)
        if (w_[i]) {
          v_ = 64 * i + std::countr_zero(w_[i]);
          return;
        }
      v_ = 64 * kWords;
    }
    std::array<Word, kWords> w_{};
    int v_ = -1;
  };
  constexpr iterator begin() const { return iterator(w_); }
  constexpr iterator end() const { return iterator(std::array<Word, kWords>{}); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

private:
  std::array<Word, kWords> w_{};
};

/// Immutable simple undirected graph on vertices 0..n-1 with bit-set rows.
class Graph {
public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw GraphError("vertex count " + std::to_string(n) + " outside 0.." +
                       std::to_string(kMaxVertices));
    adj_.resize(n);
  }

  static Graph from_edge_list(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has a vertex out of range for n=" + std::to_string(n));
      if (u == v)
        throw GraphError("loop edge at vertex " + std::to_string(u));
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
    }
    return g;
  }
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v)
      twice += adj_[v].size();
    return twice / 2;
  }
  bool empty() const { return n_ == 0; }

  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { check_vertex(v); return adj_[v]; }
  VertexSet closed_neighborhood(int v) const {
    check_vertex(v);
    return adj_[v] | VertexSet::singleton(v);
  }
  int degree(int v) const { return neighbors(v).size(); }
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
  }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v)
          out.emplace_back(u, v);
    return out;
  }

  /// Induced subgraph on `keep`; survivors are relabeled 0..k-1 in original order.
  Graph induced(VertexSet keep) const {
    keep &= vertices();
    Graph h(keep.size());
    int i = 0;
    for (int u : keep) {
      VertexSet row;
      for (int w : adj_[u] & keep)
        row.insert(rank_in(keep, w));
      h.adj_[i++] = row;
    }
    return h;
  }

  Graph delete_vertices(VertexSet s) const {
    if (!(s - vertices()).empty())
      throw GraphError("vertex set exceeds graph range");
    return induced(vertices() - s);
  }

  Graph delete_closed_neighborhood(int v) const {
    return delete_vertices(closed_neighborhood(v));
  }

  Graph delete_edge(int u, int v) const {
    require_edge(u, v);
    Graph h = *this;
    h.adj_[u].erase(v);
    h.adj_[v].erase(u);
    return h;
  }

  /// G - (N(u) ∪ N(v)); u and v themselves go too.
  Graph delete_edge_neighborhoods(int u, int v) const {
    require_edge(u, v);
    return delete_vertices(adj_[u] | adj_[v]);
  }

  /// Copy with edge uv added (no-op if present).
  Graph with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw GraphError("loop edge at vertex " + std::to_string(u));
    Graph h = *this;
    h.adj_[u].insert(v);
    h.adj_[v].insert(u);
    return h;
  }

  /// Copy with `extra` new isolated vertices appended.
  Graph with_vertices(int extra) const {
    Graph h(n_ + extra);
    std::copy(adj_.begin(), adj_.end(), h.adj_.begin());
    return h;
  }

  /// Relabel: vertex v of this graph becomes perm[v] in the result.
  Graph permuted(std::span<const int> perm) const {
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
      for (int w : adj_[u])
        h.adj_[perm[u]].insert(perm[w]);
    return h;
  }

  bool operator==(const Graph &o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

private:
  static int rank_in(VertexSet s, int w) { return s.count_below(w); }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw GraphError("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(n_));
  }
  void require_edge(int u, int v) const {
    if (!has_edge(u, v))
      throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) +
                       ") is not an edge");
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// Structural queries

/// Vertex sets of the connected components, ordered by smallest member.
inline std::vector<VertexSet> component_sets(const Graph &g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::singleton(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier)
        next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

inline std::vector<Graph> connected_components(const Graph &g) {
  std::vector<Graph> out;
  for (VertexSet s : component_sets(g))
    out.push_back(g.induced(s));
  return out;
}

inline bool is_connected(const Graph &g) {
  return g.order() > 0 && component_sets(g).size() == 1;
}

inline VertexSet pendant_vertices(const Graph &g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1)
      out.insert(v);
  return out;
}

/// BFS edge distance; nullopt when u and v lie in different components.
inline std::optional<int> distance(const Graph &g, int u, int v) {
  VertexSet seen = VertexSet::singleton(u);
  VertexSet layer = seen;
  g.neighbors(v);  // range check
  for (int d = 0; !layer.empty(); ++d) {
    if (layer.contains(v))
      return d;
    VertexSet next;
    for (int w : layer)
      next |= g.neighbors(w);
    layer = next - seen;
    seen |= next;
  }
  return std::nullopt;
}

/// n when g is exactly the path P_n (P_1 = K_1).
inline std::optional<int> is_path(const Graph &g) {
  const int n = g.order();
  if (n == 0 || g.size() != n - 1 || !is_connected(g))
    return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 2)
      return std::nullopt;
  return n;
}

/// n when g is exactly the cycle C_n, n >= 3.
inline std::optional<int> is_cycle(const Graph &g) {
  const int n = g.order();
  if (n < 3 || g.size() != n || !is_connected(g))
    return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2)
      return std::nullopt;
  return n;
}

// Small named graphs used throughout.

inline Graph path_graph(int n) {
  std::vector<Graph::Edge> e;
  for (int i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3)
    throw GraphError("cycle needs at least 3 vertices");
  std::vector<Graph::Edge> e;
  for (int i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Graph::Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

/// K_{1,k}, center 0.
inline Graph star_graph(int k) {
  std::vector<Graph::Edge> e;
  for (int i = 1; i <= k; ++i)
    e.emplace_back(0, i);
  return Graph::from_edge_list(k + 1, e);
}

}  // namespace indpoly

#endif
