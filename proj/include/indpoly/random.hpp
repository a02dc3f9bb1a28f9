#ifndef INDPOLY_RANDOM_HPP
#define INDPOLY_RANDOM_HPP

#include "indpoly/analysis.hpp"
#include "indpoly/graph.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace indpoly {

/// The raw mt19937_64 stream is fixed by the standard; the distributions in
/// <random> are not, so bounded draws go through uniform_below instead.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of item `index` in stream `stream` of a run seeded with `seed`.
/// Items are seeded individually, so results do not depend on sharding.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) + index);
}

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
  if (bound <= 1)
    return 0;
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

inline int uniform_int(Rng &rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// True with probability num/den.
inline bool bernoulli(Rng &rng, int num, int den) {
  return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(den))) < num;
}

/// G(n, num/den).
inline Graph random_graph(Rng &rng, int n, int num, int den) {
  std::vector<Graph::Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (bernoulli(rng, num, den))
        edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

/// Random recursive tree: vertex v attaches to a uniform earlier vertex.
inline Graph random_tree(Rng &rng, int n) {
  std::vector<Graph::Edge> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(uniform_int(rng, 0, v - 1), v);
  return Graph::from_edge_list(n, edges);
}

/// Random tree plus up to `extra` random non-edges, so nu = number added.
inline Graph random_connected(Rng &rng, int n, int extra) {
  Graph g = random_tree(rng, n);
  const int room = n * (n - 1) / 2 - g.size();
  extra = std::min(extra, room);
  while (extra > 0) {
    int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
    if (u == v || g.has_edge(u, v))
      continue;
    g = g.with_edge(u, v);
    --extra;
  }
  return g;
}

/// Uniformly random relabeling of g.
inline Graph random_relabel(Rng &rng, const Graph &g) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i)
    perm[i] = i;
  for (int i = g.order() - 1; i > 0; --i)
    std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
  return g.permuted(perm);
}

/// Replace each edge of g by a path with 0..max_extra interior vertices.
inline Graph random_subdivision(Rng &rng, const Graph &g, int max_extra) {
  int n = g.order();
  std::vector<Graph::Edge> edges;
  for (auto [u, v] : g.edges()) {
    int k = uniform_int(rng, 0, max_extra);
    int prev = u;
    for (int i = 0; i < k; ++i, ++n) {
      edges.emplace_back(prev, n);
      prev = n;
    }
    edges.emplace_back(prev, v);
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace indpoly

#endif
