// Command-line front end: compute, construct, traps, verify.
//
// Exit status: 0 success, 1 verification failure, 2 unusable input,
// 3 size guard refusal, 4 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brittle/classes.hpp"
#include "brittle/constructions.hpp"
#include "brittle/errors.hpp"
#include "brittle/graph6.hpp"
#include "brittle/parameters.hpp"
#include "brittle/report.hpp"
#include "brittle/traps.hpp"
#include "brittle/verify.hpp"

namespace {

using namespace brittle;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitInternal = 4;

// BRITTLE_LIMITS="max_vertices=24,max_edges=60,node_budget=1000000" overrides solver budgets.
struct Budgets {
  Limits limits;
  long long node_budget = VerifyOptions{}.partition_node_budget;
};

Budgets budgets_from_env() {
  Budgets b;
  const char* raw = std::getenv("BRITTLE_LIMITS");
  if (raw == nullptr || *raw == '\0') return b;
  std::stringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("BRITTLE_LIMITS: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("BRITTLE_LIMITS: bad number in '" + item + "'");
    }
    if (key == "max_vertices") {
      b.limits.max_vertices = static_cast<int>(value);
    } else if (key == "max_edges") {
      b.limits.max_edges = static_cast<int>(value);
    } else if (key == "oracle_edges") {
      b.limits.oracle_edges = static_cast<int>(value);
    } else if (key == "node_budget") {
      b.node_budget = value;
    } else {
      throw ParseError("BRITTLE_LIMITS: unknown key '" + key + "'");
    }
  }
  return b;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  if (path == "-") return read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph6_stream(in);
}

Graph read_edge_list_file(const std::string& path) {
  if (path == "-") return from_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return from_edge_list(in);
}

VertexSet parse_vertex_list(const std::string& text, const Graph& g) {
  VertexSet s;
  if (text.empty() || text == "-" || text == "none") return s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int v = 0;
    try {
      v = std::stoi(item);
    } catch (const std::exception&) {
      throw ParseError("bad vertex '" + item + "' in '" + text + "'");
    }
    if (!g.has_vertex(v)) throw ParseError("vertex " + item + " is not in the graph");
    s.insert(v);
  }
  return s;
}

Graph graph_by_name(const std::string& name) {
  try {
    return parse_named_graph(name);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

// Family arguments shared by `compute --family` and `construct`.
struct FamilyArgs {
  std::string family;
  std::string base = "K3";
  std::string shared;
  int k = 3;
  int l = 1;
  int n = 4;
  int m = 2;
};

Graph build_family(const FamilyArgs& a) {
  const std::string& f = a.family;
  if (f == "fan") {
    Graph base = graph_by_name(a.base);
    return fan(base, parse_vertex_list(a.shared, base), a.k);
  }
  if (f == "w-plus") return named::w_plus(a.k);
  if (f == "prop-example") return prop_example_family(a.l).hemmed.graph;
  if (f == "fig3") return named::theta_fig3();
  if (f == "fig3-contracted") return contract_edge(named::theta_fig3(), named::theta_fig3_edge());
  if (f == "fig4") return named::fig4();
  if (f == "fig4-contracted") return contract_edge(named::fig4(), named::fig4_edge());
  if (f == "complete") return named::complete(a.n);
  if (f == "complete-bipartite") return named::complete_bipartite(a.m, a.n);
  if (f == "cycle") return named::cycle(a.n);
  if (f == "path") return named::path(a.n);
  if (f == "subdivided-complete") return named::subdivided_complete(a.n);
  if (f == "diamond") return named::diamond();
  if (f == "k23") return named::k23();
  if (f == "k23-plus") return named::k23_plus();
  if (f == "named") return graph_by_name(a.base);
  throw ParseError("unknown family '" + f + "'");
}

const std::vector<std::string> kFamilies = {"fan",  "w-plus",  "prop-example", "fig3", "fig3-contracted",
                                            "fig4", "fig4-contracted", "complete", "complete-bipartite",
                                            "cycle", "path", "subdivided-complete", "diamond", "k23",
                                            "k23-plus", "named"};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--base", a.base, "Base graph for fan / named (K3, D, K2,3, K4, W+3, ...)");
  cmd->add_option("--s", a.shared, "Shared vertices of the base, comma separated (empty for none)");
  cmd->add_option("--k", a.k, "Copies for fan, size for w-plus");
  cmd->add_option("--l", a.l, "Level for prop-example");
  cmd->add_option("--n", a.n, "Size for complete, cycle, path, subdivided-complete, complete-bipartite");
  cmd->add_option("--m", a.m, "First part size for complete-bipartite");
}

std::string table_row(const ParameterReport& r, const Graph& g, bool timing) {
  std::ostringstream out;
  out << std::left << std::setw(18) << to_graph6(g) << ' ' << std::setw(7) << parameter_name(r.parameter) << std::right
      << std::setw(6) << r.value << std::setw(12) << r.nodes_expanded;
  if (timing) out << std::setw(12) << std::fixed << std::setprecision(2) << r.elapsed_ms;
  out << "  " << certificate_summary(r.certificate);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edit distance, edge-brittleness, vertex-brittleness and capacity for ideals of graphs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for enumeration and corpus checks")->check(CLI::PositiveNumber);

  // compute
  auto* compute_cmd = app.add_subcommand("compute", "Compute parameters of graphs for a class");
  std::string class_spec = "forests";
  std::vector<std::string> graph6_literals;
  std::string graph6_file;
  std::string edge_list_file;
  FamilyArgs compute_family;
  std::vector<std::string> params;
  bool all_params = false;
  std::string format = "json";
  bool timing = false;
  compute_cmd->add_option("--class", class_spec, "forests, diamond-free, outerplanar, or file:<graph6 list>");
  compute_cmd->add_option("--graph6", graph6_literals, "Inline graph6 code (repeatable)");
  compute_cmd->add_option("--graph6-file", graph6_file, "File of graph6 lines, '-' for stdin");
  compute_cmd->add_option("--edge-list", edge_list_file, "Edge-list file ('n m' then m lines 'u v'), '-' for stdin");
  compute_cmd->add_option("--family", compute_family.family, "Built-in construction instead of an input graph")
      ->check(CLI::IsMember(kFamilies));
  add_family_options(compute_cmd, compute_family);
  compute_cmd->add_option("--param", params, "e, eta, kappa, nu (repeatable)")
      ->check(CLI::IsMember({"e", "eta", "kappa", "nu"}));
  compute_cmd->add_flag("--all", all_params, "All four parameters");
  compute_cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  compute_cmd->add_flag("--timing", timing, "Report elapsed times (output is no longer byte-stable)");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Print a built-in construction");
  FamilyArgs construct_family;
  std::string construct_format = "graph6";
  construct_cmd->add_option("family", construct_family.family, "Construction name")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  add_family_options(construct_cmd, construct_family);
  construct_cmd->add_option("--format", construct_format, "graph6 or edge-list")
      ->check(CLI::IsMember({"graph6", "edge-list"}));

  // traps
  auto* traps_cmd = app.add_subcommand("traps", "Enumerate H-traps, or classify given (J, S) pairs");
  std::string trap_h = "K2,3";
  int trap_max_n = 6;
  std::string trap_source;
  std::string trap_j;
  std::string trap_s;
  traps_cmd->set_help_flag("--help", "Print this help message and exit");  // frees --h for the target
  traps_cmd->add_option("--h", trap_h, "Target H: K3, D, K2,3, K4, ... or a graph6 code prefixed with g6:");
  traps_cmd->add_option("--max-n", trap_max_n, "Largest |V(J)| to enumerate")->check(CLI::Range(1, 64));
  traps_cmd->add_option("--source", trap_source, "graph6 stream of candidate J graphs ('-' for stdin)");
  traps_cmd->add_option("--classify", trap_j, "Classify a single J (graph6) instead of enumerating");
  traps_cmd->add_option("--s", trap_s, "S for --classify, comma separated");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  bool verify_all = false;
  std::vector<std::string> suites;
  VerifyOptions vopt;
  std::string verify_format = "table";
  bool verify_timing = false;
  verify_cmd->add_flag("--all", verify_all, "Run every suite (the default when no --suite is given)");
  verify_cmd->add_option("--suite", suites, "Suite name (repeatable)")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--l-max", vopt.prop_l_max, "Largest level for prop-example")->check(CLI::Range(1, 4));
  verify_cmd->add_option("--n-max", vopt.k2n_max, "Largest n for the K2,n family")->check(CLI::Range(3, 30));
  verify_cmd->add_option("--fan-l-max", vopt.fan_l_max, "Largest multiplicity for fan bounds")->check(CLI::Range(1, 6));
  verify_cmd->add_option("--seed", vopt.seed, "Seed of the random corpus");
  verify_cmd->add_option("--random", vopt.random_graphs, "Number of random corpus graphs")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", verify_format, "table or json")->check(CLI::IsMember({"table", "json"}));
  verify_cmd->add_flag("--timing", verify_timing, "Report elapsed times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    Budgets budgets = budgets_from_env();

    if (*compute_cmd) {
      GraphClass c = class_by_name(class_spec);
      std::vector<Graph> graphs;
      for (const auto& code : graph6_literals) graphs.push_back(from_graph6(code));
      if (!graph6_file.empty()) {
        auto more = read_graph6_file(graph6_file);
        graphs.insert(graphs.end(), more.begin(), more.end());
      }
      if (!edge_list_file.empty()) graphs.push_back(read_edge_list_file(edge_list_file));
      if (!compute_family.family.empty()) graphs.push_back(build_family(compute_family));
      if (graphs.empty()) graphs = read_graph6_stream(std::cin);
      if (graphs.empty()) throw ParseError("no input graphs");

      std::vector<Parameter> wanted;
      if (all_params || params.empty()) {
        wanted = {Parameter::edit_distance, Parameter::edge_brittleness, Parameter::vertex_brittleness,
                  Parameter::capacity};
      } else {
        for (const auto& p : params) wanted.push_back(parameter_from_name(p));
      }
      if (format == "table") {
        std::cout << std::left << std::setw(18) << "graph6" << ' ' << std::setw(7) << "param" << std::right << std::setw(6)
                  << "value" << std::setw(12) << "nodes";
        if (timing) std::cout << std::setw(12) << "ms";
        std::cout << "  certificate\n";
      }
      for (const Graph& g : graphs) {
        for (Parameter p : wanted) {
          ParameterReport r = compute(p, c, g, budgets.limits);
          if (!certificate_replays(c, g, r)) {
            throw std::logic_error("certificate for " + std::string(parameter_name(p)) + " does not replay");
          }
          if (format == "json") {
            std::cout << to_json(r, c, g, timing).dump() << "\n";
          } else {
            std::cout << table_row(r, g, timing) << "\n";
          }
        }
      }
      return 0;
    }

    if (*construct_cmd) {
      Graph g = build_family(construct_family);
      std::cout << (construct_format == "graph6" ? to_graph6(g) + "\n" : to_edge_list(g));
      return 0;
    }

    if (*traps_cmd) {
      std::string h_name = trap_h;
      Graph h = trap_h.starts_with("g6:") ? from_graph6(trap_h.substr(3)) : graph_by_name(trap_h);
      if (!trap_j.empty()) {
        Graph j = from_graph6(trap_j);
        VertexSet s = parse_vertex_list(trap_s, j);
        TrapRecord rec{j, s, h_name, classify(j, s, h), {}};
        std::cout << to_json(rec).dump() << "\n";
        return 0;
      }
      std::vector<Graph> source;
      if (!trap_source.empty()) source = read_graph6_file(trap_source);
      auto found = enumerate_traps(h, h_name, trap_max_n, trap_source.empty() ? nullptr : &source, jobs);
      for (const auto& rec : found) std::cout << to_json(rec).dump() << "\n";
      return 0;
    }

    if (*verify_cmd) {
      vopt.jobs = jobs;
      vopt.limits = budgets.limits;
      vopt.partition_node_budget = budgets.node_budget;
      if (verify_all || suites.empty()) suites = suite_names();
      auto results = run_suites(suites, vopt);
      if (verify_format == "json") {
        std::cout << verify_summary(results, verify_timing).dump(2) << "\n";
      } else {
        std::cout << verify_table(results, verify_timing);
      }
      return all_passed(results) ? 0 : kExitVerifyFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SizeGuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
