#ifndef INDPOLY_FAMILIES_HPP
#define INDPOLY_FAMILIES_HPP

#include "indpoly/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace indpoly {

// ---------------------------------------------------------------------------
// Constructors. Combinators place child graphs side by side in argument
// order, so vertex 0 of the first child stays vertex 0 of the result.

/// H o K1: vertex i of h gains pendant neighbor n + i.
inline Graph corona_k1(const Graph &h) {
  const int n = h.order();
  auto edges = h.edges();
  for (int i = 0; i < n; ++i)
    edges.emplace_back(i, n + i);
  return Graph::from_edge_list(2 * n, edges);
}

inline Graph disjoint_union(std::span<const Graph> gs) {
  int total = 0;
  for (const Graph &g : gs)
    total += g.order();
  if (total > kMaxVertices)
    throw GraphError("disjoint_union: " + std::to_string(total) + " vertices exceeds cap");
  std::vector<Graph::Edge> edges;
  int offset = 0;
  for (const Graph &g : gs) {
    for (auto [u, v] : g.edges())
      edges.emplace_back(u + offset, v + offset);
    offset += g.order();
  }
  return Graph::from_edge_list(total, edges);
}

inline Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

/// Disjoint union plus every edge between the two sides.
inline Graph zykov_sum(const Graph &a, const Graph &b) {
  Graph g = disjoint_union({a, b});
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v)
      g = g.with_edge(u, a.order() + v);
  return g;
}

struct Anchored {
  Graph graph;
  int anchor = 0;
};

/// H[v, G_1, ..., G_k]: the children side by side plus a new last vertex v
/// adjacent to exactly the anchor of each child.
inline Graph join_vertex(std::span<const Anchored> parts) {
  if (parts.size() < 2)
    throw GraphError("join_vertex: needs at least two child graphs");
  std::vector<Graph> gs;
  std::vector<int> anchors;
  int offset = 0;
  for (const auto &p : parts) {
    if (p.anchor < 0 || p.anchor >= p.graph.order())
      throw GraphError("join_vertex: anchor " + std::to_string(p.anchor) + " out of range");
    gs.push_back(p.graph);
    anchors.push_back(offset + p.anchor);
    offset += p.graph.order();
  }
  if (offset + 1 > kMaxVertices)
    throw GraphError("join_vertex: result exceeds vertex cap");
  Graph g = disjoint_union(gs).with_vertices(1);
  for (int a : anchors)
    g = g.with_edge(a, offset);
  return g;
}

/// Anchor of L_s: the rightmost bottom vertex.
inline int l_chain_anchor(int s) { return s == 0 ? -1 : 2 * s - 1; }

/// L_s: s triangles b_{2i-1} b_{2i} a_i strung along the bottom path by the
/// links b_{2i} b_{2i+1}. Bottom vertices are 0..2s-1, apexes 2s..3s-1.
/// L_0 is the empty graph, which makes I(L_s; -1) = (s+1)(-1)^s hold from s = 0.
inline Graph l_chain(int s) {
  if (s < 0)
    throw GraphError("l_chain: s must be >= 0");
  if (3 * s > kMaxVertices)
    throw GraphError("l_chain: " + std::to_string(3 * s) + " vertices exceeds cap");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < s; ++i) {
    int left = 2 * i, right = 2 * i + 1, apex = 2 * s + i;
    edges.insert(edges.end(), {{left, right}, {left, apex}, {right, apex}});
    if (i + 1 < s)
      edges.emplace_back(right, right + 1);
  }
  return Graph::from_edge_list(3 * s, edges);
}

/// W_q: center 0, leaves 1..q, leaf i joined to both ends of its own K2.
inline Graph w_star(int q) {
  if (q < 2)
    throw GraphError("w_star: q must be >= 2");
  if (3 * q + 1 > kMaxVertices)
    throw GraphError("w_star: result exceeds vertex cap");
  std::vector<Graph::Edge> edges;
  for (int i = 1; i <= q; ++i) {
    int a = q + 2 * i - 1, b = q + 2 * i;
    edges.insert(edges.end(), {{0, i}, {a, b}, {i, a}, {i, b}});
  }
  return Graph::from_edge_list(3 * q + 1, edges);
}

/// P3 u-v-w (0-1-2); v joined to both ends of nu-q copies of K2, w joined
/// to one vertex of each of q triangles.
inline Graph lemma4_g1(int nu, int q) {
  if (q < 0 || q > nu)
    throw GraphError("lemma4_g1: need 0 <= q <= nu");
  const int n = 3 + 2 * (nu - q) + 3 * q;
  if (n > kMaxVertices)
    throw GraphError("lemma4_g1: result exceeds vertex cap");
  std::vector<Graph::Edge> edges{{0, 1}, {1, 2}};
  int next = 3;
  for (int i = 0; i < nu - q; ++i, next += 2)
    edges.insert(edges.end(), {{next, next + 1}, {1, next}, {1, next + 1}});
  for (int i = 0; i < q; ++i, next += 3)
    edges.insert(edges.end(), {{next, next + 1}, {next, next + 2}, {next + 1, next + 2}, {2, next}});
  return Graph::from_edge_list(n, edges);
}

namespace detail {
inline std::vector<Anchored> with_children(std::vector<Anchored> gadgets,
                                           std::span<const Anchored> children) {
  std::vector<Anchored> parts(children.begin(), children.end());
  parts.insert(parts.end(), gadgets.begin(), gadgets.end());
  return parts;
}
}  // namespace detail

/// Join a new vertex to a K2 endpoint and to each child: negates I(-1), keeps nu.
inline Graph transform_h1(std::span<const Anchored> children) {
  return join_vertex(detail::with_children({{complete_graph(2), 0}}, children));
}

/// Join a new vertex to a C5 vertex and to each child: keeps I(-1), adds 1 to nu.
inline Graph transform_h2(std::span<const Anchored> children) {
  return join_vertex(detail::with_children({{cycle_graph(5), 0}}, children));
}

/// Join a new vertex to the anchor of L_{k-1}, a K2 endpoint and each child:
/// |I(-1)| times k, nu plus k-1.
inline Graph transform_h3(std::span<const Anchored> children, int k) {
  if (k < 1)
    throw GraphError("transform_h3: k must be >= 1");
  std::vector<Anchored> gadgets;
  if (k >= 2)
    gadgets.push_back({l_chain(k - 1), l_chain_anchor(k - 1)});
  gadgets.push_back({complete_graph(2), 0});
  return join_vertex(detail::with_children(std::move(gadgets), children));
}

inline Graph transform_h1(const Graph &g, int anchor = 0) {
  Anchored a{g, anchor};
  return transform_h1(std::span<const Anchored>(&a, 1));
}
inline Graph transform_h2(const Graph &g, int anchor = 0) {
  Anchored a{g, anchor};
  return transform_h2(std::span<const Anchored>(&a, 1));
}
inline Graph transform_h3(const Graph &g, int anchor, int k) {
  Anchored a{g, anchor};
  return transform_h3(std::span<const Anchored>(&a, 1), k);
}

/// P3 u-v-w (0-1-2) with w joined to the anchor of each L_{s_j}.
inline Graph chain_product(std::span<const int> attach) {
  if (attach.empty())
    throw GraphError("chain_product: needs at least one chain");
  std::vector<Anchored> parts{{path_graph(3), 2}};
  for (int s : attach) {
    if (s < 1)
      throw GraphError("chain_product: chain lengths must be >= 1");
    parts.push_back({l_chain(s), l_chain_anchor(s)});
  }
  // join_vertex would add a fresh vertex; here w itself is the hub.
  std::vector<Graph> gs;
  for (const auto &p : parts)
    gs.push_back(p.graph);
  Graph g = disjoint_union(gs);
  int offset = 3;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    g = g.with_edge(2, offset + parts[i].anchor);
    offset += parts[i].graph.order();
  }
  return g;
}

inline Graph chain_product(std::initializer_list<int> attach) {
  return chain_product(std::span<const int>(attach.begin(), attach.size()));
}

/// Prime factorization as (prime, exponent) pairs.
inline std::vector<std::pair<long, int>> factorize(long q) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= q; ++p) {
    int e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (e)
      out.emplace_back(p, e);
  }
  if (q > 1)
    out.emplace_back(q, 1);
  return out;
}

/// chain_product with one L_{p-1} per prime factor p of q (with multiplicity);
/// |I(-1)| = q and nu = sum of e_j (p_j - 1). q = 1 gives P3.
inline Graph prime_factor(long q) {
  if (q < 1)
    throw GraphError("prime_factor: q must be >= 1");
  if (q == 1)
    return path_graph(3);
  std::vector<int> attach;
  for (auto [p, e] : factorize(q))
    for (int i = 0; i < e; ++i)
      attach.push_back(static_cast<int>(p - 1));
  return chain_product(attach);
}

/// C_n (vertices 0..n-1) with the path n+2 - n+1 - n hanging from vertex 0 by the edge n-0.
inline Graph cycle_with_tail(int n) {
  if (n < 4)
    throw GraphError("cycle_with_tail: n must be >= 4");
  auto edges = cycle_graph(n).edges();
  edges.insert(edges.end(), {{0, n}, {n, n + 1}, {n + 1, n + 2}});
  return Graph::from_edge_list(n + 3, edges);
}

/// The 12-vertex, 14-edge, nu = 3 graph with I(G;-1) = 5; vertex 2 is the
/// pivot of its factorization.
inline Graph fig22_g() {
  return Graph::from_edge_list(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {2, 6}, {6, 7},
                                    {2, 7}, {2, 8}, {8, 10}, {8, 11}, {10, 11}, {3, 9}, {4, 9}});
}

// ---------------------------------------------------------------------------
// Symbolic family descriptions

enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  Star,
  Corona,
  DisjointUnion,
  ZykovSum,
  JoinVertex,
  LChain,
  WStar,
  Lemma4G1,
  ChainProduct,
  CycleWithTail,
  TransformH1,
  TransformH2,
  TransformH3,
  Fig22G,
  PrimeFactor,
};

struct FamilyName {
  FamilyKind kind;
  const char *name;
};

inline constexpr FamilyName kFamilyNames[] = {
    {FamilyKind::Path, "path"},          {FamilyKind::Cycle, "cycle"},
    {FamilyKind::Complete, "complete"},  {FamilyKind::Star, "star"},
    {FamilyKind::Corona, "corona"},      {FamilyKind::DisjointUnion, "union"},
    {FamilyKind::ZykovSum, "zykov"},     {FamilyKind::JoinVertex, "join"},
    {FamilyKind::LChain, "lchain"},      {FamilyKind::WStar, "wstar"},
    {FamilyKind::Lemma4G1, "lemma4g1"},  {FamilyKind::ChainProduct, "chainprod"},
    {FamilyKind::CycleWithTail, "cycletail"}, {FamilyKind::TransformH1, "h1"},
    {FamilyKind::TransformH2, "h2"},     {FamilyKind::TransformH3, "h3"},
    {FamilyKind::Fig22G, "fig22g"},      {FamilyKind::PrimeFactor, "primefactor"},
};

inline std::string family_name(FamilyKind k) {
  for (const auto &e : kFamilyNames)
    if (e.kind == k)
      return e.name;
  return "?";
}

inline std::optional<FamilyKind> family_kind(std::string_view name) {
  for (const auto &e : kFamilyNames)
    if (name == e.name)
      return e.kind;
  return std::nullopt;
}

/// A construction plus its parameters. `anchor` is the '@k' suffix, used when
/// this spec is a child of a join or transform.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<long> ints;
  std::vector<FamilySpec> children;
  std::optional<long> k;
  std::optional<long> anchor;

  bool operator==(const FamilySpec &) const = default;

  /// Grammar text, e.g. "h3(lchain(2)@5, k=3)"; parses back to an equal spec.
  std::string text() const {
    std::string out = family_name(kind) + "(";
    bool first = true;
    auto sep = [&] {
      if (!first)
        out += ", ";
      first = false;
    };
    for (long v : ints) {
      sep();
      out += std::to_string(v);
    }
    for (const auto &c : children) {
      sep();
      out += c.text();
    }
    if (k) {
      sep();
      out += "k=" + std::to_string(*k);
    }
    out += ")";
    if (anchor)
      out += "@" + std::to_string(*anchor);
    return out;
  }
};

inline FamilySpec make_spec(FamilyKind kind, std::vector<long> ints = {}) {
  FamilySpec s;
  s.kind = kind;
  s.ints = std::move(ints);
  return s;
}

inline FamilySpec anchored(FamilySpec s, long anchor) {
  s.anchor = anchor;
  return s;
}

inline Graph build(const FamilySpec &spec) {
  auto need_ints = [&](std::size_t lo, std::size_t hi) {
    if (spec.ints.size() < lo || spec.ints.size() > hi)
      throw GraphError(family_name(spec.kind) + ": wrong number of integer arguments");
  };
  auto need_children = [&](std::size_t lo, std::size_t hi) {
    if (spec.children.size() < lo || spec.children.size() > hi)
      throw GraphError(family_name(spec.kind) + ": wrong number of graph arguments");
  };
  auto int_arg = [&](std::size_t i) {
    long v = spec.ints.at(i);
    if (v < 0 || v > 4096)
      throw GraphError(family_name(spec.kind) + ": argument " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  };
  auto anchored_children = [&] {
    std::vector<Anchored> out;
    for (const auto &c : spec.children)
      out.push_back({build(c), static_cast<int>(c.anchor.value_or(0))});
    return out;
  };
  if (spec.k && spec.kind != FamilyKind::TransformH3)
    throw GraphError(family_name(spec.kind) + ": unexpected k= argument");

  switch (spec.kind) {
  case FamilyKind::Path:
    need_ints(1, 1), need_children(0, 0);
    if (int_arg(0) < 1)
      throw GraphError("path: n must be >= 1");
    return path_graph(int_arg(0));
  case FamilyKind::Cycle:
    need_ints(1, 1), need_children(0, 0);
    return cycle_graph(int_arg(0));
  case FamilyKind::Complete:
    need_ints(1, 1), need_children(0, 0);
    return complete_graph(int_arg(0));
  case FamilyKind::Star:
    need_ints(1, 1), need_children(0, 0);
    return star_graph(int_arg(0));
  case FamilyKind::Corona:
    need_ints(0, 0), need_children(1, 1);
    return corona_k1(build(spec.children[0]));
  case FamilyKind::DisjointUnion: {
    need_ints(0, 0), need_children(1, 64);
    std::vector<Graph> gs;
    for (const auto &c : spec.children)
      gs.push_back(build(c));
    return disjoint_union(gs);
  }
  case FamilyKind::ZykovSum:
    need_ints(0, 0), need_children(2, 2);
    return zykov_sum(build(spec.children[0]), build(spec.children[1]));
  case FamilyKind::JoinVertex:
    need_ints(0, 0), need_children(2, 64);
    return join_vertex(anchored_children());
  case FamilyKind::LChain:
    need_ints(1, 1), need_children(0, 0);
    return l_chain(int_arg(0));
  case FamilyKind::WStar:
    need_ints(1, 1), need_children(0, 0);
    return w_star(int_arg(0));
  case FamilyKind::Lemma4G1:
    need_ints(2, 2), need_children(0, 0);
    return lemma4_g1(int_arg(0), int_arg(1));
  case FamilyKind::ChainProduct: {
    need_ints(1, 64), need_children(0, 0);
    std::vector<int> attach;
    for (std::size_t i = 0; i < spec.ints.size(); ++i)
      attach.push_back(int_arg(i));
    return chain_product(attach);
  }
  case FamilyKind::CycleWithTail:
    need_ints(1, 1), need_children(0, 0);
    return cycle_with_tail(int_arg(0));
  case FamilyKind::TransformH1:
    need_ints(0, 0), need_children(1, 64);
    return transform_h1(anchored_children());
  case FamilyKind::TransformH2:
    need_ints(0, 0), need_children(1, 64);
    return transform_h2(anchored_children());
  case FamilyKind::TransformH3:
    need_ints(0, 0), need_children(1, 64);
    if (!spec.k || *spec.k < 1 || *spec.k > 64)
      throw GraphError("h3: needs k=<count> with k >= 1");
    return transform_h3(anchored_children(), static_cast<int>(*spec.k));
  case FamilyKind::Fig22G:
    need_ints(0, 0), need_children(0, 0);
    return fig22_g();
  case FamilyKind::PrimeFactor:
    need_ints(1, 1), need_children(0, 0);
    if (spec.ints[0] < 1)
      throw GraphError("primefactor: q must be >= 1");
    return prime_factor(spec.ints[0]);
  }
  throw GraphError("unknown family");
}

}  // namespace indpoly

#endif
