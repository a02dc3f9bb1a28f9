// indpoly: command-line front end for the independence-polynomial toolkit.

#include "indpoly/analysis.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/enumeration.hpp"
#include "indpoly/families.hpp"
#include "indpoly/io.hpp"
#include "indpoly/search.hpp"
#include "indpoly/verify.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

using namespace indpoly;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(std::istream &in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// A file path, '-' for stdin, or a literal graph6 string. File and stdin
/// contents may be graph6 (first non-empty line) or an edge list.
Graph read_graph(const std::string &arg) {
  std::string text;
  if (arg == "-") {
    text = slurp(std::cin);
  } else if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    text = slurp(in);
  } else {
    return parse_graph6(arg);
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line == "\r")
      continue;
    if (line.rfind("n ", 0) == 0 || line[0] == '#')
      return parse_edge_list(text);
    return parse_graph6(line);
  }
  throw UsageError("no graph in input '" + arg + "'");
}

Integer parse_integer(const std::string &s, const char *what) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument &) {
    throw UsageError(std::string("invalid integer for ") + what + ": '" + s + "'");
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact independence polynomials and their value at -1"};
  app.require_subcommand(1);

  std::string input;
  std::string strategy_name = "auto";
  bool show_stats = false;
  auto *poly_cmd = app.add_subcommand("poly", "independence polynomial (pretty form, then coefficients)");
  poly_cmd->add_option("input", input, "graph6 string, file, or - for stdin")->required();
  poly_cmd->add_option("--strategy", strategy_name,
                       "vertex-max-degree | vertex-min-degree | pendant-neighbor-first | edge | auto");
  poly_cmd->add_flag("--stats", show_stats, "print recursion statistics");

  std::string at = "-1";
  auto *eval_cmd = app.add_subcommand("eval", "I(G;t) as an exact integer");
  eval_cmd->add_option("input", input, "graph6 string, file, or - for stdin")->required();
  eval_cmd->add_option("--at", at, "evaluation point (default -1)");

  auto *oracle_cmd = app.add_subcommand("oracle", "independence polynomial by exhaustive enumeration");
  oracle_cmd->add_option("input", input, "graph6 string, file, or - for stdin")->required();

  auto *props_cmd = app.add_subcommand("props", "structural profile");
  props_cmd->add_option("input", input, "graph6 string, file, or - for stdin")->required();

  std::string spec_text, out_format = "g6";
  auto *construct_cmd = app.add_subcommand("construct", "build a graph from a family spec");
  construct_cmd->add_option("spec", spec_text, "e.g. \"h3(lchain(2)@3, k=3)\"")->required();
  construct_cmd->add_option("--out", out_format, "g6 | edges")->check(CLI::IsMember({"g6", "edges"}));

  std::string suite_name, report_path;
  SuiteOptions suite_opts;
  auto *verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite_name, "lemma1 | theorem6 | cyclomatic | wellcovered | families | all")
      ->required()
      ->check(CLI::IsMember({"lemma1", "theorem6", "cyclomatic", "wellcovered", "families", "all"}));
  verify_cmd->add_option("--max-n", suite_opts.max_n, "suite size bound (0 = suite default)");
  verify_cmd->add_option("--seed", suite_opts.seed, "seed for randomized cases");
  verify_cmd->add_option("--jobs", suite_opts.jobs, "worker threads")->check(CLI::Range(1, 256));
  verify_cmd->add_option("--report", report_path, "write line-delimited JSON records here");

  int nu = 0;
  std::string target;
  SearchBudget budget;
  std::uint64_t seed = 1;
  auto *search_cmd = app.add_subcommand("search", "look for a connected graph with given nu and I(G;-1)");
  search_cmd->add_option("--nu", nu, "cyclomatic number")->required()->check(CLI::Range(0, 30));
  search_cmd->add_option("--target", target, "target value q")->required();
  search_cmd->add_option("--budget", budget.work, "work units (engine nodes + generated graphs)");
  search_cmd->add_option("--seed", seed, "seed for the local search");
  bool no_catalog = false;
  search_cmd->add_flag("--no-catalog", no_catalog, "skip the identity and join catalogs");

  auto *coverage_cmd = app.add_subcommand("coverage", "search every q with |q| <= 2^nu");
  coverage_cmd->add_option("--nu", nu, "cyclomatic number")->required()->check(CLI::Range(0, 8));
  coverage_cmd->add_option("--budget", budget.work, "work units per target");
  coverage_cmd->add_option("--seed", seed, "seed for the local search");
  coverage_cmd->add_flag("--no-catalog", no_catalog, "skip the identity and join catalogs");

  std::string kind;
  int order = 0;
  std::optional<int> nu_filter;
  auto *enum_cmd = app.add_subcommand("enumerate", "graph6 stream of trees or connected graphs");
  enum_cmd->add_option("--kind", kind, "trees | connected")->required()->check(CLI::IsMember({"trees", "connected"}));
  enum_cmd->add_option("--n", order, "vertex count")->required();
  enum_cmd->add_option("--nu", nu_filter, "keep only this cyclomatic number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  budget.catalogs = !no_catalog;

  try {
    if (*poly_cmd) {
      auto strategy = parse_strategy(strategy_name);
      if (!strategy)
        throw UsageError("unknown strategy '" + strategy_name + "'");
      Engine::Options opts;
      opts.strategy = *strategy;
      auto res = Engine(opts).independence_poly(read_graph(input));
      std::cout << res.poly.pretty() << '\n' << res.poly.coefficient_list() << '\n';
      if (show_stats)
        std::cout << "nodes=" << res.stats.recursion_nodes << " memo_hits=" << res.stats.memo_hits
                  << " closed_form_hits=" << res.stats.closed_form_hits
                  << " max_depth=" << res.stats.max_depth << " strategy=" << to_string(res.stats.strategy)
                  << '\n';
    } else if (*eval_cmd) {
      Integer t = parse_integer(at, "--at");
      std::cout << Engine().evaluate(read_graph(input), t).value << '\n';
    } else if (*oracle_cmd) {
      Polynomial p = brute_force_poly(read_graph(input));
      std::cout << p.pretty() << '\n' << p.coefficient_list() << '\n';
    } else if (*props_cmd) {
      std::cout << profile(read_graph(input)).render();
    } else if (*construct_cmd) {
      Graph g = build(parse_family_spec(spec_text));
      if (out_format == "edges")
        std::cout << write_edge_list(g);
      else
        std::cout << write_graph6(g) << '\n';
    } else if (*verify_cmd) {
      std::vector<std::string> names;
      if (suite_name == "all")
        names.assign(std::begin(kSuiteNames), std::end(kSuiteNames));
      else
        names.push_back(suite_name);
      bool ok = true;
      std::string jsonl;
      for (const auto &name : names) {
        SuiteReport r = run_suite(name, suite_opts);
        std::cout << r.render_text();
        std::cerr << r.suite << ": " << r.elapsed.count() << " ms\n";
        jsonl += r.to_jsonl();
        ok = ok && r.passed();
      }
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
          throw UsageError("cannot write report to '" + report_path + "'");
        out << jsonl;
      }
      return ok ? 0 : kExitFailure;
    } else if (*search_cmd) {
      Integer q = parse_integer(target, "--target");
      std::cout << search(nu, q, budget, seed).render() << '\n';
    } else if (*coverage_cmd) {
      std::cout << render_coverage(coverage_table(nu, budget, seed));
    } else if (*enum_cmd) {
      auto emit = [&](const Graph &g) {
        if (!nu_filter || cyclomatic_number(g) == *nu_filter)
          std::cout << write_graph6(g) << '\n';
      };
      if (kind == "trees") {
        FreeTreeGenerator gen(order);
        while (auto t = gen.next())
          emit(*t);
      } else {
        for (const Graph &g : connected_graphs(order))
          emit(g);
      }
    }
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    // GraphError, ParseError, SearchError
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
