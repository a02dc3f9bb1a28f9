#ifndef INDPOLY_SEARCH_HPP
#define INDPOLY_SEARCH_HPP

#include "indpoly/analysis.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/enumeration.hpp"
#include "indpoly/families.hpp"
#include "indpoly/io.hpp"
#include "indpoly/random.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace indpoly {

enum class SearchStatus { FoundWitness, FoundIdentity, NotFoundWithinBudget };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
  case SearchStatus::FoundWitness: return "FoundWitness";
  case SearchStatus::FoundIdentity: return "FoundIdentity";
  case SearchStatus::NotFoundWithinBudget: return "NotFoundWithinBudget";
  }
  return "?";
}

class SearchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Work units: engine recursion nodes plus one per generated graph.
struct SearchBudget {
  std::uint64_t work = 2'000'000;
  /// Largest order for the exhaustive scan (at most kMaxConnectedOrder).
  int scan_max_n = kMaxConnectedOrder;
  /// Consult the identity and join catalogs before the budgeted stages.
  bool catalogs = true;
};

struct SearchResult {
  int nu = 0;
  Integer q;
  SearchStatus status = SearchStatus::NotFoundWithinBudget;
  std::optional<Graph> witness;
  /// Set for FoundIdentity.
  std::optional<FamilySpec> spec;
  /// catalog-identity, catalog-join, exhaustive or local-search.
  std::string method;
  std::uint64_t spent = 0;

  bool found() const { return status != SearchStatus::NotFoundWithinBudget; }

  std::string render() const {
    std::ostringstream os;
    os << "nu=" << nu << " q=" << q << " status=" << to_string(status);
    if (found()) {
      os << " method=" << method << " n=" << witness->order() << " m=" << witness->size();
      if (spec)
        os << " spec=" << spec->text();
      os << " graph6=" << write_graph6(*witness);
    }
    os << " spent=" << spent;
    return os.str();
  }
};

/// Independent check of a witness: a fresh engine on the edge recursion with
/// no memo, plus the brute-force oracle when the graph is small.
inline bool verify_witness(const Graph &g, int nu, const Integer &q) {
  if (!is_connected(g) || cyclomatic_number(g) != nu)
    return false;
  Engine::Options opts;
  opts.strategy = Strategy::EdgeRecursion;
  opts.memo_threshold = 0;
  if (Engine(opts).alternating_number(g) != q)
    return false;
  if (g.order() <= 20 && brute_force_poly(g).eval(-1) != q)
    return false;
  return true;
}

/// Search state for one cyclomatic number; catalogs are built on first use
/// and shared by every target.
class Searcher {
public:
  Searcher(int nu, SearchBudget budget = {}, std::uint64_t seed = 1)
      : nu_(nu), budget_(budget), seed_(seed) {
    if (nu < 0 || nu > 30)
      throw SearchError("search: nu must be in 0..30");
    Engine::Options opts;
    opts.labeled_memo = false;
    engine_ = std::make_unique<Engine>(opts);
  }

  int nu() const { return nu_; }

  SearchResult find(const Integer &q) {
    if (abs(q) > detail_pow2(nu_))
      throw SearchError("search: |q| = " + Integer(abs(q)).get_str() + " exceeds 2^nu = " +
                        detail_pow2(nu_).get_str() + ", impossible by the cyclomatic bound");
    SearchResult r;
    r.nu = nu_;
    r.q = q;
    spent_ = 0;

    if (auto hit = budget_.catalogs ? identity_lookup(q) : std::nullopt) {
      r.status = SearchStatus::FoundIdentity;
      r.spec = hit->first;
      r.witness = hit->second;
      r.method = "catalog-identity";
    } else if (auto g = budget_.catalogs ? join_lookup(q) : std::nullopt) {
      finish_witness(r, *g, "catalog-join");
    } else if (auto g2 = exhaustive(q)) {
      finish_witness(r, *g2, "exhaustive");
    } else if (auto g3 = local_search(q)) {
      finish_witness(r, *g3, "local-search");
    }
    if (r.found() && !verify_witness(*r.witness, nu_, q)) {
      // never report an unverified witness
      r.status = SearchStatus::NotFoundWithinBudget;
      r.witness.reset();
      r.spec.reset();
      r.method = "rejected-on-verification";
    }
    r.spent = spent_;
    return r;
  }

private:
  static Integer detail_pow2(int k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return r;
  }

  bool exhausted() const { return spent_ >= budget_.work; }

  Integer value(const Graph &g) {
    auto res = engine_->evaluate(g, -1);
    spent_ += res.stats.recursion_nodes;
    return res.value;
  }

  void finish_witness(SearchResult &r, Graph g, std::string method) {
    r.status = SearchStatus::FoundWitness;
    r.witness = minimize(std::move(g), r.q);
    r.method = std::move(method);
  }

  /// Greedy vertex deletion keeping connectivity, nu and the value.
  Graph minimize(Graph g, const Integer &q) {
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (int v = g.order() - 1; v >= 0; --v) {
        Graph h = g.delete_vertices(VertexSet::singleton(v));
        if (is_connected(h) && cyclomatic_number(h) == nu_ && value(h) == q) {
          g = std::move(h);
          shrunk = true;
          break;
        }
      }
    }
    return g;
  }

  // -------------------------------------------------------------------------
  // Stage 1a: closed-form families and transforms

  std::optional<std::pair<FamilySpec, Graph>> identity_lookup(const Integer &q) {
    if (!identities_)
      build_identities();
    auto it = identities_->find(q);
    if (it == identities_->end())
      return std::nullopt;
    return it->second;
  }

  void build_identities() {
    identities_.emplace();
    auto h2 = [](FamilySpec child) {
      FamilySpec s = make_spec(FamilyKind::TransformH2);
      s.children.push_back(std::move(child));
      return s;
    };
    auto h1 = [](FamilySpec child) {
      FamilySpec s = make_spec(FamilyKind::TransformH1);
      s.children.push_back(std::move(child));
      return s;
    };
    // wraps spec in H2 until it reaches nu_; nullopt if it already exceeds it
    auto pad = [&](FamilySpec s, int have) -> std::optional<FamilySpec> {
      if (have > nu_)
        return std::nullopt;
      for (; have < nu_; ++have)
        s = h2(std::move(s));
      return s;
    };

    std::vector<FamilySpec> candidates;
    auto add = [&](std::optional<FamilySpec> s) {
      if (s)
        candidates.push_back(std::move(*s));
    };
    add(pad(make_spec(FamilyKind::Path, {1}), 0));
    add(pad(make_spec(FamilyKind::Path, {2}), 0));
    add(pad(make_spec(FamilyKind::Path, {5}), 0));
    for (int k = 0; k <= nu_; ++k)
      add(make_spec(FamilyKind::Lemma4G1, {nu_, k}));
    for (int k = 2; k <= nu_; ++k)
      add(pad(make_spec(FamilyKind::WStar, {k}), k));
    add(pad(make_spec(FamilyKind::Fig22G), 3));
    const long top = nu_ < 12 ? (1L << nu_) : 4096L;
    for (long m = 2; m <= top; ++m) {
      int need = 0;
      for (auto [p, e] : factorize(m))
        need += e * static_cast<int>(p - 1);
      add(pad(make_spec(FamilyKind::PrimeFactor, {m}), need));
    }

    for (const FamilySpec &base : candidates)
      for (const FamilySpec &s : {base, h1(base)}) {
        Graph g;
        try {
          g = build(s);
        } catch (const GraphError &) {
          continue;  // over the vertex cap
        }
        if (cyclomatic_number(g) != nu_ || !is_connected(g))
          continue;
        Integer v = engine_->alternating_number(g);
        auto it = identities_->find(v);
        if (it == identities_->end() || g.order() < it->second.second.order())
          (*identities_)[v] = {s, g};
      }
  }

  // -------------------------------------------------------------------------
  // Stage 1b: joins H[v, G_1..G_k] composed through
  //   I(H) = prod I(G_i) - prod I(G_i - u_i),  I(H - v) = prod I(G_i)

  struct Piece {
    long a = 0, b = 0;  // I(G;-1), I(G-u;-1)
    int nu = 0;
    int order = 0;
    std::optional<Graph> graph;  // base piece, anchored at `anchor`
    int anchor = 0;
    std::vector<int> children;  // join piece, anchored at the new vertex
  };
  using Key = std::tuple<int, long, long>;

  std::optional<Graph> join_lookup(const Integer &q) {
    if (nu_ > 12 || !q.fits_slong_p())
      return std::nullopt;
    if (!pieces_built_)
      build_pieces();
    const long target = q.get_si();
    int best = -1;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const Piece &p = pieces_[i];
      if (p.nu == nu_ && p.a == target && (best < 0 || p.order < pieces_[best].order))
        best = static_cast<int>(i);
    }
    if (best < 0 || pieces_[best].order > kMaxVertices)
      return std::nullopt;
    return materialize(best).graph;
  }

  void add_piece(Piece p) {
    Key key{p.nu, p.a, p.b};
    auto it = piece_index_.find(key);
    if (it == piece_index_.end()) {
      piece_index_.emplace(key, static_cast<int>(pieces_.size()));
      pieces_.push_back(std::move(p));
    } else if (p.order < pieces_[it->second].order && p.graph) {
      pieces_[it->second] = std::move(p);
    }
  }

  void build_pieces() {
    pieces_built_ = true;
    for (int n = 1; n <= 6; ++n)
      for (const Graph &g : connected_graphs(n)) {
        const int gnu = cyclomatic_number(g);
        if (gnu > nu_)
          continue;
        const long a = engine_->alternating_number(g).get_si();
        for (int u = 0; u < n; ++u) {
          Piece p;
          p.a = a;
          p.b = engine_->alternating_number(g.delete_vertices(VertexSet::singleton(u))).get_si();
          p.nu = gnu;
          p.order = n;
          p.graph = g;
          p.anchor = u;
          add_piece(std::move(p));
        }
      }
    for (int s = 1; s <= nu_; ++s) {
      Graph g = l_chain(s);
      Piece p;
      p.anchor = l_chain_anchor(s);
      p.a = engine_->alternating_number(g).get_si();
      p.b = engine_->alternating_number(g.delete_vertices(VertexSet::singleton(p.anchor))).get_si();
      p.nu = s;
      p.order = g.order();
      p.graph = g;
      add_piece(std::move(p));
    }

    // Closure: products of >= 2 pieces become new pieces until nothing new.
    struct Product {
      int order;
      std::vector<int> children;
    };
    bool grew = true;
    while (grew) {
      grew = false;
      std::map<Key, Product> singles, multis;
      for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece &p = pieces_[i];
        Key k{p.nu, p.a, p.b};
        auto it = singles.find(k);
        if (it == singles.end())
          singles.emplace(k, Product{p.order, {static_cast<int>(i)}});
      }
      std::vector<std::pair<Key, Product>> frontier(singles.begin(), singles.end());
      while (!frontier.empty()) {
        std::vector<std::pair<Key, Product>> next;
        for (const auto &[key, prod] : frontier) {
          auto [pnu, pa, pb] = key;
          for (std::size_t i = 0; i < pieces_.size(); ++i) {
            const Piece &p = pieces_[i];
            if (pnu + p.nu > nu_)
              continue;
            ++spent_catalog_;
            Key k{pnu + p.nu, pa * p.a, pb * p.b};
            const int order = prod.order + p.order;
            auto it = multis.find(k);
            if (it != multis.end() && it->second.order <= order)
              continue;
            Product np{order, prod.children};
            np.children.push_back(static_cast<int>(i));
            multis[k] = np;
            next.emplace_back(k, std::move(np));
          }
        }
        frontier = std::move(next);
      }
      for (const auto &[key, prod] : multis) {
        auto [pnu, pa, pb] = key;
        Key k{pnu, pa - pb, pa};
        if (piece_index_.count(k))
          continue;
        Piece p;
        p.a = pa - pb;
        p.b = pa;
        p.nu = pnu;
        p.order = prod.order + 1;
        p.children = prod.children;
        add_piece(std::move(p));
        grew = true;
      }
    }
  }

  Anchored materialize(int index) const {
    const Piece &p = pieces_[index];
    if (p.graph)
      return {*p.graph, p.anchor};
    std::vector<Anchored> parts;
    for (int c : p.children)
      parts.push_back(materialize(c));
    Graph g = join_vertex(parts);
    return {g, g.order() - 1};
  }

  // -------------------------------------------------------------------------
  // Stage 2: every connected graph of order <= scan_max_n with this nu

  std::optional<Graph> exhaustive(const Integer &q) {
    const int top = std::min(budget_.scan_max_n, kMaxConnectedOrder);
    for (int n = 1; n <= top && !exhausted(); ++n) {
      // nu = m - n + 1 <= n(n-1)/2 - n + 1
      if (nu_ > n * (n - 1) / 2 - n + 1)
        continue;
      if (scanned_.size() <= static_cast<std::size_t>(n))
        scanned_.resize(n + 1);
      if (!scanned_[n])
        scanned_[n] = connected_graphs_with_nu(n, nu_);
      for (const Graph &g : *scanned_[n]) {
        ++spent_;
        if (value(g) == q)
          return g;
        if (exhausted())
          return std::nullopt;
      }
    }
    return std::nullopt;
  }

  // -------------------------------------------------------------------------
  // Stage 3: hill climbing on |I - q| over connected graphs with this nu.
  // Moves: rewire an edge (keeps m and n), add a pendant vertex, drop a leaf.

  std::optional<Graph> local_search(const Integer &q) {
    for (std::uint64_t restart = 0; !exhausted(); ++restart) {
      Rng rng(derive_seed(seed_, 7, restart));
      const int n0 = std::min(nu_ + uniform_int(rng, 3, 12), 24);
      Graph g = random_connected(rng, n0, nu_);
      if (cyclomatic_number(g) != nu_)
        continue;
      ++spent_;
      Integer dist = abs(value(g) - q);
      for (int step = 0; step < 300 && !exhausted(); ++step) {
        if (dist == 0)
          return g;
        std::optional<Graph> cand = mutate(rng, g);
        if (!cand)
          continue;
        ++spent_;
        Integer d = abs(value(*cand) - q);
        if (d <= dist) {
          g = std::move(*cand);
          dist = d;
        }
      }
      if (dist == 0)
        return g;
    }
    return std::nullopt;
  }

  std::optional<Graph> mutate(Rng &rng, const Graph &g) {
    const int n = g.order();
    switch (uniform_int(rng, 0, 3)) {
    case 0:
      if (n < 24)
        return g.with_vertices(1).with_edge(uniform_int(rng, 0, n - 1), n);
      return std::nullopt;
    case 1: {
      std::vector<int> leaves;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1)
          leaves.push_back(v);
      if (leaves.empty() || n <= 2)
        return std::nullopt;
      int v = leaves[uniform_below(rng, leaves.size())];
      return g.delete_vertices(VertexSet::singleton(v));
    }
    default: {
      auto edges = g.edges();
      auto [u, v] = edges[uniform_below(rng, edges.size())];
      int a = uniform_int(rng, 0, n - 1), b = uniform_int(rng, 0, n - 1);
      if (a == b || g.has_edge(a, b))
        return std::nullopt;
      Graph h = g.delete_edge(u, v).with_edge(a, b);
      if (!is_connected(h))
        return std::nullopt;
      return h;
    }
    }
  }

  int nu_;
  SearchBudget budget_;
  std::uint64_t seed_;
  std::unique_ptr<Engine> engine_;
  std::uint64_t spent_ = 0;
  std::uint64_t spent_catalog_ = 0;

  std::optional<std::map<Integer, std::pair<FamilySpec, Graph>>> identities_;
  bool pieces_built_ = false;
  std::vector<Piece> pieces_;
  std::map<Key, int> piece_index_;
  std::vector<std::optional<std::vector<Graph>>> scanned_;
};

inline SearchResult search(int nu, const Integer &q, SearchBudget budget = {},
                           std::uint64_t seed = 1) {
  return Searcher(nu, budget, seed).find(q);
}

/// search for every q with |q| <= 2^nu, in increasing q.
inline std::vector<SearchResult> coverage_table(int nu, SearchBudget budget = {},
                                               std::uint64_t seed = 1) {
  if (nu < 0 || nu > 8)
    throw SearchError("coverage: nu must be in 0..8");
  Searcher s(nu, budget, seed);
  std::vector<SearchResult> out;
  const long top = 1L << nu;
  for (long q = -top; q <= top; ++q)
    out.push_back(s.find(Integer(q)));
  return out;
}

inline std::string render_coverage(const std::vector<SearchResult> &rows) {
  std::ostringstream os;
  std::vector<std::string> missing;
  std::size_t found = 0;
  for (const auto &r : rows) {
    os << r.render() << '\n';
    if (r.found())
      ++found;
    else
      missing.push_back(r.q.get_str());
  }
  os << "found " << found << " of " << rows.size();
  if (!missing.empty()) {
    os << "; missing:";
    for (const auto &m : missing)
      os << ' ' << m;
  }
  os << '\n';
  return os.str();
}

}  // namespace indpoly

#endif
