// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <path-to-indpoly-cli>

#include "indpoly/analysis.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/enumeration.hpp"
#include "indpoly/families.hpp"
#include "indpoly/io.hpp"
#include "indpoly/random.hpp"
#include "indpoly/search.hpp"
#include "indpoly/verify.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace indpoly;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string &args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  CliRun r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string field(const std::string &line, const std::string &key) {
  auto at = line.find(" " + key + "=");
  if (at == std::string::npos)
    return {};
  at += key.size() + 2;
  return line.substr(at, line.find(' ', at) - at);
}

std::string suite_detail(const SuiteReport &r) {
  std::string d = r.summary();
  for (const auto &f : r.failures()) {
    d += "; first failure " + f.id + " graph=" + f.graph + " expected=" + f.expected + " got=" + f.got;
    break;
  }
  return d;
}

// ---------------------------------------------------------------------------

Outcome c1_printed_values() {
  struct Row {
    std::string name;
    Graph g;
    Polynomial want;
  };
  std::vector<Row> rows = {
      {"K2", complete_graph(2), {1, 2}},
      {"P1", path_graph(1), {1, 1}},
      {"P2", path_graph(2), {1, 2}},
      {"P3", path_graph(3), {1, 3, 1}},
      {"P4", path_graph(4), {1, 4, 3}},
      {"P5", path_graph(5), {1, 5, 6, 1}},
      {"C3", cycle_graph(3), {1, 3}},
      {"C4", cycle_graph(4), {1, 4, 2}},
      {"C5", cycle_graph(5), {1, 5, 5}},
      {"C6", cycle_graph(6), {1, 6, 9, 2}},
      {"C7", cycle_graph(7), {1, 7, 14, 7}},
      {"K1,3", star_graph(3), {1, 4, 3, 1}},
      {"K1,4", star_graph(4), {1, 5, 6, 4, 1}},
      {"T5", Graph::from_edge_list(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}}), {1, 5, 6, 2}},
      {"T1", Graph::from_edge_list(4, {{0, 1}, {1, 2}, {1, 3}}), {1, 4, 3, 1}},
      {"T2", Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}}), {1, 6, 10, 6, 1}},
      {"T3", Graph::from_edge_list(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}}),
       {1, 7, 15, 12, 5, 1}},
      {"L1", l_chain(1), {1, 3}},
      {"K1", Graph(1), {1, 1}},
  };
  for (int q = 2; q <= 6; ++q)
    rows.push_back({"W" + std::to_string(q), w_star(q),
                    Polynomial{1, 3}.pow(q) + Polynomial{1, 2}.pow(q).shifted(1)});
  std::size_t checks = 0;
  for (const auto &row : rows)
    for (Strategy s : kAllStrategies) {
      ++checks;
      Polynomial got = independence_poly(row.g, s).poly;
      if (got != row.want)
        return {false, row.name + " via " + std::string(to_string(s)) + ": got " + got.pretty() +
                           ", want " + row.want.pretty()};
    }
  return {true, std::to_string(rows.size()) + " polynomials x " + std::to_string(std::size(kAllStrategies)) +
                    " strategies = " + std::to_string(checks) + " exact matches"};
}

Outcome c2_oracle_equivalence() {
  const int graphs = 600;
  std::size_t checks = 0;
  for (int i = 0; i < graphs; ++i) {
    Rng rng(derive_seed(2, 0, static_cast<std::uint64_t>(i)));
    Graph g = random_graph(rng, uniform_int(rng, 0, 12), uniform_int(rng, 1, 9), 10);
    Polynomial want = brute_force_poly(g);
    for (Strategy s : kAllStrategies) {
      ++checks;
      if (independence_poly(g, s).poly != want)
        return {false, "mismatch on " + write_graph6(g) + " via " + std::string(to_string(s))};
    }
  }
  return {true, std::to_string(graphs) + " random graphs, " + std::to_string(checks) + " comparisons"};
}

Outcome suite_outcome(const SuiteReport &r) { return {r.passed(), suite_detail(r)}; }

Outcome c3_lemma1() {
  SuiteOptions o;
  o.max_n = 40;
  o.recurrence_limit = 1'000'000;
  return suite_outcome(suite_lemma1(o));
}

Outcome c4_theorem6() {
  SuiteOptions o;
  o.max_n = 14;
  SuiteReport r = suite_theorem6(o);
  const std::uint64_t want = 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 + 235 + 551 + 1301 + 3159;
  Outcome out = suite_outcome(r);
  if (r.cases_run != want) {
    out.pass = false;
    out.detail += "; expected " + std::to_string(want) + " trees";
  }
  return out;
}

Outcome c5_cyclomatic() {
  SuiteOptions o;
  o.max_n = 8;
  SuiteReport r = suite_cyclomatic_bound(o);
  Outcome out = suite_outcome(r);
  for (int nu = 0; nu <= 2; ++nu) {
    std::string witness;
    for (const auto &rec : r.records)
      if (rec.status == CaseStatus::Info && rec.id.rfind("tight ", 0) == 0 &&
          rec.id.ends_with(" nu=" + std::to_string(nu))) {
        witness = rec.graph;
        break;
      }
    if (witness.empty()) {
      out.pass = false;
      out.detail += "; no tightness witness for nu=" + std::to_string(nu);
    } else {
      out.detail += "; tight nu=" + std::to_string(nu) + " " + witness;
    }
  }
  return out;
}

Outcome c6_well_covered() { return suite_outcome(suite_well_covered({})); }

Outcome c7_families() { return suite_outcome(suite_families({})); }

Outcome c8_coverage_nu3() {
  CliRun r = cli("coverage --nu 3");
  if (r.code != 0)
    return {false, "coverage exited " + std::to_string(r.code)};
  std::istringstream lines(r.out);
  std::string line, last;
  int rows = 0;
  bool plus5 = false, minus5 = false;
  while (std::getline(lines, line)) {
    last = line;
    if (line.rfind("nu=", 0) != 0)
      continue;
    ++rows;
    std::string q = field(" " + line, "q");
    if (field(line, "status") == "NotFoundWithinBudget")
      return {false, "q=" + q + " not realized"};
    Graph g = parse_graph6(field(line, "graph6"));
    if (!verify_witness(g, 3, Integer(q)))
      return {false, "q=" + q + " witness failed re-verification"};
    std::string spec = field(line, "spec");
    if (q == "5")
      plus5 = spec == "fig22g()";
    if (q == "-5")
      minus5 = spec.find("fig22g()") != std::string::npos;
  }
  if (rows != 17 || last != "found 17 of 17")
    return {false, "expected 17 realized rows, summary '" + last + "'"};
  if (!plus5 || !minus5)
    return {false, "q=+-5 not witnessed by fig22g"};
  if (alternating_number(fig22_g()) != 5 || cyclomatic_number(fig22_g()) != 3)
    return {false, "fig22g does not have nu=3, I=5"};
  return {true, "all 17 values realized and re-verified; q=5 by fig22g(), q=-5 by h1 over it"};
}

Outcome c9_open_cases() {
  std::string detail;
  bool ok = true;
  for (int q : {13, 11}) {
    CliRun r = cli("search --nu 4 --target " + std::to_string(q));
    std::string line = r.out.substr(0, r.out.find('\n'));
    std::string status = field(line, "status");
    if (r.code != 0 || status.empty()) {
      ok = false;
      detail += "q=" + std::to_string(q) + ": no explicit status; ";
      continue;
    }
    if (status == "NotFoundWithinBudget") {
      detail += "q=" + std::to_string(q) + ": NotFoundWithinBudget; ";
      continue;
    }
    Graph g = parse_graph6(field(line, "graph6"));
    bool verified = is_connected(g) && cyclomatic_number(g) == 4 &&
                    brute_force_poly(g).eval(-1) == q;
    if (!verified) {
      ok = false;
      detail += "q=" + std::to_string(q) + ": reported witness failed re-verification; ";
      continue;
    }
    detail += "q=" + std::to_string(q) + ": " + status + " re-verified by brute force (FINDING) graph6=" +
              field(line, "graph6") + "; ";
  }
  return {ok, detail};
}

Outcome c10_format_fidelity() {
  std::size_t graphs = 0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<Graph> all = connected_graphs(n);
    for (Graph &t : free_trees(n))
      all.push_back(std::move(t));
    for (const Graph &g : all) {
      ++graphs;
      std::string s = write_graph6(g);
      if (write_graph6(parse_graph6(s)) != s || parse_graph6(s) != g)
        return {false, "graph6 round trip failed on " + s};
    }
  }
  const char *runs[] = {
      "verify wellcovered --max-n 6 --seed 7",
      "verify families --seed 3 --jobs 2",
      "search --nu 4 --target 13 --seed 5",
      "search --nu 5 --target 9 --budget 20000 --no-catalog --seed 11",
      "coverage --nu 2",
      "enumerate --kind connected --n 6",
      "construct 'h3(lchain(2)@3, k=3)' --out edges",
  };
  for (const char *args : runs) {
    CliRun a = cli(args), b = cli(args);
    if (a.out != b.out || a.code != b.code)
      return {false, std::string("output differs across repetitions: ") + args};
    if (a.out.empty())
      return {false, std::string("no output from: ") + args};
  }
  return {true, std::to_string(graphs) + " graphs round-tripped; " + std::to_string(std::size(runs)) +
                    " CLI invocations byte-identical across repeats"};
}

}  // namespace

int main(int argc, char **argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <indpoly-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  struct Criterion {
    int id;
    const char *name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "printed-value regression", 1, c1_printed_values},
      {2, "oracle equivalence", 30, c2_oracle_equivalence},
      {3, "path/cycle sweep", 60, c3_lemma1},
      {4, "tree sweep n<=14", 300, c4_theorem6},
      {5, "cyclomatic bound n<=8", 900, c5_cyclomatic},
      {6, "well-covered suite", 600, c6_well_covered},
      {7, "family identities", 300, c7_families},
      {8, "nu=3 coverage", 120, c8_coverage_nu3},
      {9, "open-case honesty", 1e9, c9_open_cases},
      {10, "format fidelity", 1e9, c10_format_fidelity},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= c.limit_s) {
      o.pass = false;
      o.detail += "; runtime over limit";
    }
    failed += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") [" << timing
              << "]: " << o.detail << std::endl;
  }
  std::cout << (failed ? "FAILED: " : "ALL PASSED: ") << (10 - failed) << "/10 criteria" << std::endl;
  return failed ? 1 : 0;
}
