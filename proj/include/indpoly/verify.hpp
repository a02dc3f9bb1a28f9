#ifndef INDPOLY_VERIFY_HPP
#define INDPOLY_VERIFY_HPP

#include "indpoly/analysis.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/enumeration.hpp"
#include "indpoly/families.hpp"
#include "indpoly/io.hpp"
#include "indpoly/parallel.hpp"
#include "indpoly/random.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace indpoly {

enum class CaseStatus { Pass, Fail, Info };

inline std::string_view to_string(CaseStatus s) {
  switch (s) {
  case CaseStatus::Pass: return "pass";
  case CaseStatus::Fail: return "fail";
  case CaseStatus::Info: return "info";
  }
  return "?";
}

inline std::optional<CaseStatus> parse_case_status(std::string_view s) {
  for (CaseStatus c : {CaseStatus::Pass, CaseStatus::Fail, CaseStatus::Info})
    if (to_string(c) == s)
      return c;
  return std::nullopt;
}

/// One line of a report. `graph` is a graph6 string, or a family spec when
/// the graph is too large to be worth materializing.
struct CaseRecord {
  std::string suite;
  std::string id;
  std::string graph;
  std::string expected;
  std::string got;
  CaseStatus status = CaseStatus::Fail;

  bool operator==(const CaseRecord &) const = default;
};

/// Outcome of one suite. Records hold every failure plus informational notes
/// such as tightness witnesses; passing checks are only counted.
struct SuiteReport {
  std::string suite;
  std::string unit = "cases";
  std::uint64_t cases_run = 0;
  std::vector<CaseRecord> records;
  std::chrono::milliseconds elapsed{0};

  std::vector<CaseRecord> failures() const {
    std::vector<CaseRecord> out;
    for (const auto &r : records)
      if (r.status == CaseStatus::Fail)
        out.push_back(r);
    return out;
  }
  std::size_t failure_count() const { return failures().size(); }
  bool passed() const { return failure_count() == 0; }

  /// Elapsed time is not part of the serialized form and is ignored here.
  bool operator==(const SuiteReport &o) const {
    return suite == o.suite && unit == o.unit && cases_run == o.cases_run && records == o.records;
  }

  /// e.g. "theorem6: 987 trees, 0 failures"
  std::string summary() const {
    return suite + ": " + std::to_string(cases_run) + " " + unit + ", " +
           std::to_string(failure_count()) + " failures";
  }

  std::string render_text() const {
    std::ostringstream os;
    os << summary() << '\n';
    for (const auto &r : records) {
      os << "  [" << to_string(r.status) << "] " << r.id;
      if (!r.graph.empty())
        os << "  graph=" << r.graph;
      os << "  expected=" << r.expected << "  got=" << r.got << '\n';
    }
    return os.str();
  }

  /// One JSON object per line: a "summary" record, then the records.
  std::string to_jsonl() const {
    std::string out;
    auto line = [&](const std::string &id, const std::string &graph, const std::string &expected,
                    const std::string &got, std::string_view status) {
      nlohmann::ordered_json j;
      j["suite"] = suite;
      j["case"] = id;
      j["graph"] = graph;
      j["expected"] = expected;
      j["got"] = got;
      j["status"] = status;
      out += j.dump() + "\n";
    };
    line("summary", "", unit, std::to_string(cases_run), passed() ? "pass" : "fail");
    for (const auto &r : records)
      line(r.id, r.graph, r.expected, r.got, to_string(r.status));
    return out;
  }
};

/// Inverse of SuiteReport::to_jsonl over any concatenation of reports.
inline std::vector<SuiteReport> parse_report_jsonl(std::string_view text) {
  std::vector<SuiteReport> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string("report: ") + e.what(), lineno);
    }
    auto field = [&](const char *name) {
      if (!j.contains(name) || !j[name].is_string())
        throw ParseError(std::string("report: missing string field '") + name + "'", lineno);
      return j[name].get<std::string>();
    };
    std::string id = field("case");
    if (id == "summary") {
      SuiteReport r;
      r.suite = field("suite");
      r.unit = field("expected");
      try {
        r.cases_run = std::stoull(field("got"));
      } catch (const std::exception &) {
        throw ParseError("report: bad case count", lineno);
      }
      out.push_back(std::move(r));
      continue;
    }
    if (out.empty() || out.back().suite != field("suite"))
      throw ParseError("report: record before its suite summary", lineno);
    auto status = parse_case_status(field("status"));
    if (!status)
      throw ParseError("report: bad status", lineno);
    out.back().records.push_back(
        {field("suite"), id, field("graph"), field("expected"), field("got"), *status});
  }
  return out;
}

struct SuiteOptions {
  /// 0 selects the suite's default bound.
  int max_n = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Largest n for the integer-recurrence route of lemma1.
  std::int64_t recurrence_limit = 1'000'000;
};

namespace detail {

/// Per-item results, merged in item order.
struct ItemLog {
  std::uint64_t units = 0;
  std::vector<CaseRecord> records;

  void check(bool ok, const std::string &id, const std::string &graph, const std::string &expected,
             const std::string &got) {
    if (!ok)
      records.push_back({"", id, graph, expected, got, CaseStatus::Fail});
  }
  template <class A, class B>
  void check_eq(const A &expected, const B &got, const std::string &id, const std::string &graph) {
    if (!(expected == got))
      records.push_back({"", id, graph, str(expected), str(got), CaseStatus::Fail});
  }
  void note(const std::string &id, const std::string &graph, const std::string &expected,
            const std::string &got) {
    records.push_back({"", id, graph, expected, got, CaseStatus::Info});
  }

  template <class T>
  static std::string str(const T &v) {
    if constexpr (std::is_same_v<T, Polynomial>) {
      return v.coefficient_list();
    } else if constexpr (std::is_same_v<T, bool>) {
      return v ? "true" : "false";
    } else {
      std::ostringstream os;
      os << v;
      return os.str();
    }
  }
};

inline void merge(SuiteReport &r, std::vector<ItemLog> logs) {
  for (auto &log : logs) {
    r.cases_run += log.units;
    for (auto &rec : log.records) {
      rec.suite = r.suite;
      r.records.push_back(std::move(rec));
    }
  }
}

inline Integer pow2(unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline int sign_pow(long k) { return k % 2 == 0 ? 1 : -1; }

template <class Fn>
SuiteReport timed(std::string suite, std::string unit, Fn body) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = std::move(suite);
  r.unit = std::move(unit);
  body(r);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

/// Nonempty forest whose components are all K2.
inline bool is_matching_graph(const Graph &g) {
  if (g.order() == 0)
    return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 1)
      return false;
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Values at -1 of paths and cycles by residue class

inline long periodic_path_value(std::int64_t n) {
  std::int64_t k = (n + 2) / 3;
  return n % 3 == 1 ? 0 : detail::sign_pow(k);
}

inline long periodic_cycle_value(std::int64_t n) {
  switch (n % 3) {
  case 0: return 2 * detail::sign_pow(n / 3);
  case 1: return detail::sign_pow((n - 1) / 3);
  default: return detail::sign_pow((n - 2) / 3 + 1);
  }
}

/// Paths and cycles: engine (closed forms disabled) against the Fibonacci
/// polynomials and the residue-class values, then the plain integer
/// recurrence F_k = F_{k-1} - F_{k-2} at -1 out to recurrence_limit.
inline SuiteReport suite_lemma1(const SuiteOptions &opts = {}) {
  return detail::timed("lemma1", "cases", [&](SuiteReport &report) {
    const int max_n = opts.max_n ? opts.max_n : 40;
    if (max_n < 3)
      throw GraphError("lemma1: max_n must be >= 3");
    const int graph_n = std::min(max_n, kMaxVertices);
    Engine::Options eo;
    eo.closed_forms = false;
    Engine engine(eo);

    auto logs = parallel_map(static_cast<std::size_t>(graph_n), opts.jobs, [&](std::size_t i) {
      const int n = static_cast<int>(i) + 1;
      detail::ItemLog log;
      Graph p = path_graph(n);
      std::string tag = "path(" + std::to_string(n) + ")";
      Polynomial ip = engine.independence_poly(p).poly;
      log.check_eq(path_poly(n), ip, tag + " polynomial", write_graph6(p));
      log.check_eq(Integer(periodic_path_value(n)), engine.evaluate(p, -1).value, tag + " value",
                   write_graph6(p));
      log.check_eq(Integer(periodic_path_value(n)), ip.eval(-1), tag + " polynomial at -1",
                   write_graph6(p));
      if (n <= 20)
        log.check_eq(brute_force_poly(p), ip, tag + " oracle", write_graph6(p));
      ++log.units;
      if (n >= 3) {
        Graph c = cycle_graph(n);
        tag = "cycle(" + std::to_string(n) + ")";
        Polynomial ic = engine.independence_poly(c).poly;
        log.check_eq(cycle_poly(n), ic, tag + " polynomial", write_graph6(c));
        log.check_eq(Integer(periodic_cycle_value(n)), engine.evaluate(c, -1).value, tag + " value",
                     write_graph6(c));
        log.check_eq(Integer(periodic_cycle_value(n)), ic.eval(-1), tag + " polynomial at -1",
                     write_graph6(c));
        if (n <= 20)
          log.check_eq(brute_force_poly(c), ic, tag + " oracle", write_graph6(c));
        ++log.units;
      }
      return log;
    });
    detail::merge(report, std::move(logs));
    if (graph_n < max_n)
      report.records.push_back({report.suite, "graph route capped", "", std::to_string(max_n),
                                std::to_string(graph_n), CaseStatus::Info});

    // Integer route. f[k] holds F_k(-1); I(P_n) = F_{n+1}, I(C_n) = F_{n-1} - 2 F_{n-2}.
    detail::ItemLog log;
    const std::int64_t limit = std::max<std::int64_t>(opts.recurrence_limit, max_n);
    long f_prev2 = 1, f_prev1 = 1;  // F_0, F_1
    for (std::int64_t k = 2; k <= limit + 1; ++k) {
      long f = f_prev1 - f_prev2;
      f_prev2 = f_prev1;
      f_prev1 = f;
      // f = F_k: path n = k-1, and cycle n = k+1 once F_{k-1}, F_k are known
      const std::int64_t pn = k - 1;
      if (pn >= 1 && pn <= limit) {
        if (f != periodic_path_value(pn) || Integer(f) != value_at_minus_one_path(pn))
          log.check(false, "path recurrence", "path(" + std::to_string(pn) + ")",
                    std::to_string(periodic_path_value(pn)), std::to_string(f));
        ++log.units;
      }
      const std::int64_t cn = k + 1;
      if (cn >= 3 && cn <= limit) {
        long cv = f - 2 * f_prev2;
        if (cv != periodic_cycle_value(cn) || Integer(cv) != value_at_minus_one_cycle(cn))
          log.check(false, "cycle recurrence", "cycle(" + std::to_string(cn) + ")",
                    std::to_string(periodic_cycle_value(cn)), std::to_string(cv));
        ++log.units;
      }
    }
    log.note("recurrence route", "", "n <= " + std::to_string(limit), "checked");
    detail::merge(report, {std::move(log)});
  });
}

/// Number of free trees on n vertices, n <= 16.
inline constexpr long kFreeTreeCounts[] = {0,   1,   1,    1,    2,    3,    6,    11,  23,
                                           47,  106, 235,  551,  1301, 3159, 7741, 19320};

/// All free trees of order <= max_n: value in {-1,0,1}, dependent-set
/// balance, the T-v / T-N[v] products, and the well-covered tree facts.
inline SuiteReport suite_theorem6(const SuiteOptions &opts = {}) {
  return detail::timed("theorem6", "trees", [&](SuiteReport &report) {
    const int max_n = opts.max_n ? opts.max_n : 14;
    if (max_n < 1 || max_n > kMaxTreeOrder)
      throw GraphError("theorem6: max_n must be in 1.." + std::to_string(kMaxTreeOrder));
    Engine engine;
    auto in_unit = [](const Integer &v) { return v >= -1 && v <= 1; };
    for (int n = 1; n <= max_n; ++n) {
      auto trees = free_trees(n);
      detail::ItemLog head;
      head.check_eq(kFreeTreeCounts[n], static_cast<long>(trees.size()),
                    "tree count n=" + std::to_string(n), "");
      detail::merge(report, {std::move(head)});
      auto logs = parallel_map(trees.size(), opts.jobs, [&](std::size_t i) {
        const Graph &t = trees[i];
        const std::string g6 = write_graph6(t);
        detail::ItemLog log;
        ++log.units;
        Integer value = engine.alternating_number(t);
        log.check(in_unit(value), "value in {-1,0,1}", g6, "-1..1", value.get_str());

        auto dep = dependent_set_balance(t);
        Integer gap = dep.even - dep.odd;
        log.check(abs(gap) <= 1, "dependent balance", g6, "|even-odd| <= 1", gap.get_str());
        log.check_eq(Integer(-value), gap, "dependent balance equals -I(T;-1)", g6);

        const bool wc = is_well_covered(t);
        log.check_eq(n == 1 || corona_decompose(t).has_value(), wc,
                     "well-covered iff K1 or corona", g6);
        if (wc && n != 2) {
          auto stable = even_odd_counts(engine.independence_poly(t).poly);
          log.check_eq(Integer(0), value, "well-covered tree value", g6);
          log.check_eq(dep.even, dep.odd, "well-covered dependent balance", g6);
          log.check((stable.even + stable.odd) % 2 == 0, "stable total even", g6, "even",
                    Integer(stable.even + stable.odd).get_str());
          log.check((dep.even + dep.odd) % 2 == 0, "dependent total even", g6, "even",
                    Integer(dep.even + dep.odd).get_str());
        }
        if (n >= 2) {
          for (int v = 0; v < n; ++v) {
            Integer a = engine.alternating_number(t.delete_vertices(VertexSet::singleton(v)));
            Integer b = engine.alternating_number(t.delete_closed_neighborhood(v));
            Integer ab = a * b, ta = value * a;
            log.check(ab == 0 || ab == 1, "I(T-v)I(T-N[v]) v=" + std::to_string(v), g6, "0 or 1",
                      ab.get_str());
            log.check(ta == 0 || ta == 1, "I(T)I(T-v) v=" + std::to_string(v), g6, "0 or 1",
                      ta.get_str());
          }
        }
        return log;
      });
      detail::merge(report, std::move(logs));
    }
  });
}

/// |I(G;-1)| <= 2^nu on every connected graph of order <= max_n (and on any
/// extra graphs supplied), with the graphs attaining equality noted.
inline SuiteReport suite_cyclomatic_bound(const SuiteOptions &opts = {},
                                          std::span<const Graph> extra = {}) {
  return detail::timed("cyclomatic", "graphs", [&](SuiteReport &report) {
    const int max_n = opts.max_n ? opts.max_n : 8;
    if (max_n < 1 || max_n > kMaxConnectedOrder)
      throw GraphError("cyclomatic: max_n must be in 1.." + std::to_string(kMaxConnectedOrder));
    Engine engine;
    std::vector<bool> tight_nu(kMaxVertices * kMaxVertices, false);

    auto sweep = [&](const std::vector<Graph> &graphs, const std::string &label) {
      struct Out {
        detail::ItemLog log;
        int nu = 0;
        bool tight = false;
      };
      auto outs = parallel_map(graphs.size(), opts.jobs, [&](std::size_t i) {
        Out o;
        const Graph &g = graphs[i];
        ++o.log.units;
        o.nu = cyclomatic_number(g);
        Integer v = engine.alternating_number(g);
        Integer bound = detail::pow2(static_cast<unsigned>(o.nu));
        o.log.check(abs(v) <= bound, "bound nu=" + std::to_string(o.nu), write_graph6(g),
                    "|I| <= " + bound.get_str(), v.get_str());
        o.tight = abs(v) == bound;
        return o;
      });
      std::vector<detail::ItemLog> logs;
      std::vector<bool> noted(kMaxVertices * kMaxVertices, false);
      for (std::size_t i = 0; i < outs.size(); ++i) {
        auto &o = outs[i];
        if (o.tight && !noted[o.nu]) {
          noted[o.nu] = true;
          tight_nu[o.nu] = true;
          o.log.note("tight " + label + " nu=" + std::to_string(o.nu), write_graph6(graphs[i]),
                     "|I| = 2^" + std::to_string(o.nu),
                     engine.alternating_number(graphs[i]).get_str());
        }
        logs.push_back(std::move(o.log));
      }
      detail::merge(report, std::move(logs));
    };

    for (int n = 1; n <= max_n; ++n)
      sweep(connected_graphs(n), "n=" + std::to_string(n));
    if (!extra.empty())
      sweep(std::vector<Graph>(extra.begin(), extra.end()), "external");

    // qK3 attains (-2)^q exactly
    detail::ItemLog log;
    for (int q = 0; q <= 4; ++q) {
      std::vector<Graph> parts(q, complete_graph(3));
      Graph g = disjoint_union(parts);
      ++log.units;
      Integer v = engine.alternating_number(g);
      Integer want = detail::sign_pow(q) * detail::pow2(q);
      log.check_eq(want, v, "qK3 value q=" + std::to_string(q), write_graph6(g));
      log.check_eq(q, cyclomatic_number(g), "qK3 nu q=" + std::to_string(q), write_graph6(g));
      if (v == want && cyclomatic_number(g) == q) {
        tight_nu[q] = true;
        log.note("tight qK3 nu=" + std::to_string(q), write_graph6(g),
                 "|I| = 2^" + std::to_string(q), v.get_str());
      }
    }
    for (int nu = 0; nu <= 2; ++nu)
      log.check(tight_nu[nu], "tightness witness exists nu=" + std::to_string(nu), "", "found",
                "none");
    detail::merge(report, {std::move(log)});
  });
}

namespace detail {

/// Connected base of girth >= 6 (or a tree) with at least two vertices.
inline Graph girth6_base(std::uint64_t seed, std::size_t index) {
  Rng rng(derive_seed(seed, 1, index));
  switch (index % 3) {
  case 0: return random_tree(rng, uniform_int(rng, 2, 10));
  case 1: return cycle_graph(uniform_int(rng, 6, 12));
  default:
    while (true) {
      Graph core = random_connected(rng, uniform_int(rng, 3, 6), uniform_int(rng, 1, 3));
      Graph g = random_subdivision(rng, core, 3);
      auto gi = girth(g);
      if (g.order() <= 14 && (!gi || *gi >= 6))
        return g;
    }
  }
}

}  // namespace detail

/// Coronas of girth >= 6 bases vanish at -1; well-covered unicyclic graphs
/// other than C3 land in {-1,0,1}; the vertex and edge deletion identities
/// on well-covered trees of order 6..14; the girth-5/6 structure theorems on
/// small connected graphs.
inline SuiteReport suite_well_covered(const SuiteOptions &opts = {}) {
  return detail::timed("wellcovered", "graphs", [&](SuiteReport &report) {
    const int max_n = opts.max_n ? opts.max_n : 8;
    if (max_n < 3 || max_n > kMaxConnectedOrder)
      throw GraphError("wellcovered: max_n must be in 3.." + std::to_string(kMaxConnectedOrder));
    Engine engine;

    // (a) coronas
    auto corona_logs = parallel_map(100, opts.jobs, [&](std::size_t i) {
      detail::ItemLog log;
      Graph base = detail::girth6_base(opts.seed, i);
      Graph g = corona_k1(base);
      const std::string g6 = write_graph6(g);
      ++log.units;
      auto gi = girth(base);
      log.check(is_connected(base) && (!gi || *gi >= 6), "corona base girth >= 6",
                write_graph6(base), ">= 6", gi ? std::to_string(*gi) : "inf");
      log.check_eq(Integer(0), engine.alternating_number(g), "corona value", g6);
      log.check_eq(true, is_well_covered(g), "corona well-covered", g6);
      auto back = corona_decompose(g);
      log.check(back && *back == base, "corona decomposes to its base", g6, write_graph6(base),
                back ? write_graph6(*back) : "none");
      return log;
    });
    detail::merge(report, std::move(corona_logs));

    // (b) well-covered unicyclic graphs, (d) structure theorems
    for (int n = 1; n <= max_n; ++n) {
      auto graphs = connected_graphs(n);
      auto logs = parallel_map(graphs.size(), opts.jobs, [&](std::size_t i) {
        detail::ItemLog log;
        const Graph &g = graphs[i];
        const std::string g6 = write_graph6(g);
        const int nu = cyclomatic_number(g);
        auto gi = girth(g);
        const bool wc = is_well_covered(g);
        const bool corona = corona_decompose(g).has_value();
        if (nu == 1 && wc) {
          ++log.units;
          Integer v = engine.alternating_number(g);
          if (g.order() == 3) {
            log.check_eq(Integer(-2), v, "C3 value", g6);
            log.note("well-covered unicyclic (excluded C3)", g6, "-2", v.get_str());
          } else {
            log.check(v >= -1 && v <= 1, "well-covered unicyclic value", g6, "-1..1", v.get_str());
            log.note("well-covered unicyclic", g6, "-1..1", v.get_str());
          }
        }
        if ((!gi || *gi >= 6) && n != 1 && !(n == 7 && is_cycle(g))) {
          ++log.units;
          log.check_eq(corona, wc, "girth >= 6: well-covered iff corona", g6);
        }
        if (!gi || *gi >= 5) {
          ++log.units;
          log.check_eq(corona, is_very_well_covered(g), "girth >= 5: very well-covered iff corona",
                       g6);
        }
        return log;
      });
      detail::merge(report, std::move(logs));
    }

    // (c) well-covered trees
    for (int n = 6; n <= 14; ++n) {
      auto trees = free_trees(n);
      auto logs = parallel_map(trees.size(), opts.jobs, [&](std::size_t i) {
        detail::ItemLog log;
        const Graph &t = trees[i];
        if (!is_well_covered(t))
          return log;
        ++log.units;
        const std::string g6 = write_graph6(t);
        log.check_eq(Integer(0), engine.alternating_number(t), "well-covered tree value", g6);
        for (int v = 0; v < n; ++v) {
          Graph far = t.delete_closed_neighborhood(v);
          if (detail::is_matching_graph(far))
            continue;
          log.check_eq(Integer(0), engine.alternating_number(t.delete_vertices(VertexSet::singleton(v))),
                       "I(T-v) v=" + std::to_string(v), g6);
          log.check_eq(Integer(0), engine.alternating_number(far), "I(T-N[v]) v=" + std::to_string(v),
                       g6);
        }
        for (auto [u, v] : t.edges()) {
          std::string e = std::to_string(u) + "-" + std::to_string(v);
          log.check_eq(Integer(0), engine.alternating_number(t.delete_edge(u, v)), "I(T-uv) " + e, g6);
          log.check_eq(Integer(0), engine.alternating_number(t.delete_edge_neighborhoods(u, v)),
                       "I(T-N(u)uN(v)) " + e, g6);
        }
        return log;
      });
      detail::merge(report, std::move(logs));
    }
  });
}

/// Value and cyclomatic bookkeeping of every construction in families.
inline SuiteReport suite_families(const SuiteOptions &opts = {}) {
  return detail::timed("families", "constructions", [&](SuiteReport &report) {
    Engine engine;
    using detail::ItemLog;
    using detail::pow2;
    using detail::sign_pow;
    auto value = [&](const Graph &g) { return engine.alternating_number(g); };
    auto poly = [&](const Graph &g) { return engine.independence_poly(g).poly; };
    const Polynomial x = Polynomial::monomial(1);

    // L_s
    {
      ItemLog log;
      std::vector<Polynomial> ls;
      for (int s = 0; 3 * s <= kMaxVertices; ++s) {
        Graph g = l_chain(s);
        std::string tag = "lchain(" + std::to_string(s) + ")";
        ++log.units;
        log.check_eq(Integer((s + 1) * sign_pow(s)), value(g), tag + " value", tag);
        log.check_eq(s, cyclomatic_number(g), tag + " nu", tag);
        log.check_eq(s >= 1, is_connected(g), tag + " connected", tag);
        if (s <= 10) {
          ls.push_back(poly(g));
          if (s == 1)
            log.check_eq(Polynomial{1, 3}, ls[1], tag + " polynomial", tag);
          if (s >= 2)
            log.check_eq(Polynomial{1, 3} * ls[s - 1] - x * x * ls[s - 2], ls[s],
                         tag + " recurrence", tag);
          if (g.order() <= kOracleLimit)
            log.check_eq(brute_force_poly(g), ls[s], tag + " oracle", tag);
        }
      }
      detail::merge(report, {std::move(log)});
    }

    // W_q
    {
      ItemLog log;
      for (int q = 2; 3 * q + 1 <= kMaxVertices; ++q) {
        Graph g = w_star(q);
        std::string tag = "wstar(" + std::to_string(q) + ")";
        ++log.units;
        log.check_eq(Integer(sign_pow(q) * (pow2(q) - 1)), value(g), tag + " value", tag);
        log.check_eq(q, cyclomatic_number(g), tag + " nu", tag);
        log.check_eq(Polynomial{1, 3}.pow(q) + x * Polynomial{1, 2}.pow(q), poly(g),
                     tag + " polynomial", tag);
      }
      detail::merge(report, {std::move(log)});
    }

    // equal-nu pairs with values q and -q
    {
      auto pairs = parallel_map(24, opts.jobs, [&](std::size_t i) {
        ItemLog log;
        const int nu = static_cast<int>(i) + 1;
        for (int q = 0; q <= nu; ++q) {
          std::string at = "(" + std::to_string(nu) + "," + std::to_string(q) + ")";
          Graph g1 = lemma4_g1(nu, q);
          ++log.units;
          log.check_eq(Integer(sign_pow(q + 1) * pow2(q)), value(g1), "lemma4g1" + at + " value",
                       "lemma4g1" + at);
          log.check_eq(nu, cyclomatic_number(g1), "lemma4g1" + at + " nu", "lemma4g1" + at);
          log.check_eq(true, is_connected(g1), "lemma4g1" + at + " connected", "lemma4g1" + at);

          Graph g2 = q == 0 ? Graph(1) : q == 1 ? complete_graph(2) : w_star(q);
          for (int have = cyclomatic_number(g2); have < nu; ++have)
            g2 = transform_h2(g2, 0);
          if (g2.order() > kMaxVertices)
            continue;
          ++log.units;
          const std::string tag = "G2" + at;
          log.check_eq(Integer(sign_pow(q) * (pow2(q) - 1)), value(g2), tag + " value", tag);
          log.check_eq(nu, cyclomatic_number(g2), tag + " nu", tag);
          log.check_eq(true, is_connected(g2), tag + " connected", tag);
        }
        return log;
      });
      detail::merge(report, std::move(pairs));
    }

    // vertex-join identity on random tuples
    {
      auto logs = parallel_map(200, opts.jobs, [&](std::size_t i) {
        ItemLog log;
        Rng rng(derive_seed(opts.seed, 2, i));
        const int k = uniform_int(rng, 2, 4);
        std::vector<Anchored> parts;
        for (int j = 0; j < k; ++j) {
          Graph g = random_connected(rng, uniform_int(rng, 1, 6), uniform_int(rng, 0, 3));
          parts.push_back({g, uniform_int(rng, 0, g.order() - 1)});
        }
        Graph h = join_vertex(parts);
        const std::string g6 = write_graph6(h);
        ++log.units;
        Polynomial full = Polynomial::one(), minus = Polynomial::one();
        Integer vfull = 1, vminus = 1;
        int nu = 0;
        bool connected = true;
        for (const auto &p : parts) {
          Graph gu = p.graph.delete_vertices(VertexSet::singleton(p.anchor));
          full = full * poly(p.graph);
          minus = minus * poly(gu);
          vfull *= value(p.graph);
          vminus *= value(gu);
          nu += cyclomatic_number(p.graph);
          connected = connected && is_connected(p.graph);
        }
        log.check_eq(full + x * minus, poly(h), "join polynomial", g6);
        log.check_eq(Integer(vfull - vminus), value(h), "join value", g6);
        log.check_eq(nu, cyclomatic_number(h), "join nu", g6);
        if (connected)
          log.check_eq(true, is_connected(h), "join connected", g6);
        return log;
      });
      detail::merge(report, std::move(logs));
    }

    // prime factorization construction
    {
      auto logs = parallel_map(49, opts.jobs, [&](std::size_t i) {
        ItemLog log;
        const long q = static_cast<long>(i) + 2;
        Graph g = prime_factor(q);
        std::string tag = "primefactor(" + std::to_string(q) + ")";
        int nu = 0;
        for (auto [p, e] : factorize(q))
          nu += e * static_cast<int>(p - 1);
        ++log.units;
        Integer v = value(g);
        log.check_eq(Integer(q), Integer(abs(v)), tag + " |value|", tag);
        log.check_eq(nu, cyclomatic_number(g), tag + " nu", tag);
        log.check_eq(true, is_connected(g), tag + " connected", tag);
        return log;
      });
      detail::merge(report, std::move(logs));
      ItemLog log;
      for (auto [attach, want_nu, want] :
           {std::tuple{std::vector<int>{1, 1, 2}, 4, 12}, {std::vector<int>{1, 1, 2, 3}, 7, 48},
            {std::vector<int>{1}, 1, 2}}) {
        Graph g = chain_product(attach);
        ++log.units;
        log.check_eq(Integer(want), Integer(abs(value(g))), "chainprod |value|", write_graph6(g));
        log.check_eq(want_nu, cyclomatic_number(g), "chainprod nu", write_graph6(g));
      }
      detail::merge(report, {std::move(log)});
    }

    // H1 / H2 / H3 on random bases
    {
      auto logs = parallel_map(60, opts.jobs, [&](std::size_t i) {
        ItemLog log;
        Rng rng(derive_seed(opts.seed, 3, i));
        Graph g = random_connected(rng, uniform_int(rng, 1, 7), uniform_int(rng, 0, 3));
        const int anchor = uniform_int(rng, 0, g.order() - 1);
        const Integer v = value(g);
        const int nu = cyclomatic_number(g);
        const std::string g6 = write_graph6(g);
        Graph h1 = transform_h1(g, anchor), h2 = transform_h2(g, anchor);
        log.units += 2;
        log.check_eq(Integer(-v), value(h1), "h1 value", g6);
        log.check_eq(nu, cyclomatic_number(h1), "h1 nu", g6);
        log.check_eq(true, is_connected(h1), "h1 connected", g6);
        log.check_eq(v, value(h2), "h2 value", g6);
        log.check_eq(nu + 1, cyclomatic_number(h2), "h2 nu", g6);
        log.check_eq(true, is_connected(h2), "h2 connected", g6);
        for (int k = 1; k <= 4; ++k) {
          Graph h3 = transform_h3(g, anchor, k);
          ++log.units;
          std::string tag = "h3 k=" + std::to_string(k);
          log.check_eq(Integer(sign_pow(k) * k * v), value(h3), tag + " value", g6);
          log.check_eq(nu + k - 1, cyclomatic_number(h3), tag + " nu", g6);
          log.check_eq(true, is_connected(h3), tag + " connected", g6);
        }
        return log;
      });
      detail::merge(report, std::move(logs));
    }

    // fixed graphs, cycle with tail, Zykov sums, coronas, multipartite
    {
      ItemLog log;
      Graph g = fig22_g();
      const std::string g6 = write_graph6(g);
      ++log.units;
      Polynomial a{1, 2}, b{1, 3}, p3{1, 3, 1};
      log.check_eq(Integer(5), value(g), "fig22g value", g6);
      log.check_eq(3, cyclomatic_number(g), "fig22g nu", g6);
      log.check_eq(a * b * b * p3 + x * a.pow(3), poly(g), "fig22g factorization", g6);
      log.check_eq(a * b * b * p3, poly(g.delete_vertices(VertexSet::singleton(2))), "fig22g minus v",
                   g6);

      for (int n = 4; n + 3 <= kMaxVertices; ++n) {
        Graph c = cycle_with_tail(n);
        std::string tag = "cycletail(" + std::to_string(n) + ")";
        ++log.units;
        log.check_eq(Integer(-periodic_cycle_value(n)), value(c), tag + " value", tag);
        if (n <= 40)
          log.check_eq(path_poly(3) * cycle_poly(n) - x * x * Polynomial{1, 1} * path_poly(n - 3),
                       poly(c), tag + " polynomial", tag);
      }

      for (std::size_t i = 0; i < 50; ++i) {
        Rng rng(derive_seed(opts.seed, 4, i));
        Graph g1 = random_graph(rng, uniform_int(rng, 1, 6), 1, 2);
        Graph g2 = random_graph(rng, uniform_int(rng, 1, 6), 1, 2);
        Graph z = zykov_sum(g1, g2);
        ++log.units;
        log.check_eq(poly(g1) + poly(g2) - Polynomial::one(), poly(z), "zykov polynomial",
                     write_graph6(z));
        Graph h = random_connected(rng, uniform_int(rng, 2, 9), uniform_int(rng, 0, 4));
        Graph c = corona_k1(h);
        ++log.units;
        log.check_eq(Integer(0), value(c), "corona value", write_graph6(c));
        log.check(corona_decompose(c) == std::optional<Graph>(h), "corona round trip",
                  write_graph6(c), write_graph6(h), "mismatch");
      }

      for (int p = 1; p <= 5; ++p)
        for (int alpha = 1; alpha <= 4; ++alpha) {
          Graph m(alpha);
          for (int i = 1; i < p; ++i)
            m = zykov_sum(m, Graph(alpha));
          ++log.units;
          std::string tag = "multipartite(" + std::to_string(p) + "," + std::to_string(alpha) + ")";
          log.check_eq(equal_multipartite_poly(p, alpha), brute_force_poly(m), tag, write_graph6(m));
          log.check_eq(Integer(1 - p), value(m), tag + " value", write_graph6(m));
        }
      detail::merge(report, {std::move(log)});
    }
  });
}

inline constexpr std::string_view kSuiteNames[] = {"lemma1", "theorem6", "cyclomatic", "wellcovered",
                                                   "families"};

inline SuiteReport run_suite(std::string_view name, const SuiteOptions &opts = {}) {
  if (name == "lemma1")
    return suite_lemma1(opts);
  if (name == "theorem6")
    return suite_theorem6(opts);
  if (name == "cyclomatic")
    return suite_cyclomatic_bound(opts);
  if (name == "wellcovered")
    return suite_well_covered(opts);
  if (name == "families")
    return suite_families(opts);
  throw GraphError("unknown suite '" + std::string(name) + "'");
}

}  // namespace indpoly

#endif
