#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "brittle/canonical.hpp"
#include "brittle/classes.hpp"
#include "brittle/constructions.hpp"
#include "brittle/generate.hpp"
#include "brittle/graph6.hpp"
#include "brittle/oracles.hpp"
#include "brittle/parallel.hpp"
#include "brittle/parameters.hpp"
#include "brittle/traps.hpp"

namespace brittle {

/// Outcome of one verification check.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  long long cases = 0;
  std::vector<std::string> notes;     // facts established along the way
  std::vector<std::string> failures;  // capped, see fail()
  double elapsed_ms = 0.0;

  void fail(const std::string& what) {
    passed = false;
    if (failures.size() < 25) failures.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) fail(what);
  }
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  int random_graphs = 200;
  double mean_degree = 2.5;  // expected average degree of the random corpus graphs
  int k2n_max = 8;
  int prop_l_max = 4;
  int fan_l_max = 3;
  int oracle_max_n = 6;
  long long partition_node_budget = 50'000'000;
  int jobs = 1;
  Limits limits{};
};

/// All connected graphs on <= 6 vertices, then seeded G(n, p) samples on 7-10
/// vertices with p chosen for the given expected average degree.
inline std::vector<Graph> default_corpus(std::uint64_t seed = VerifyOptions{}.seed, int random_graphs = 200,
                                         double mean_degree = VerifyOptions{}.mean_degree) {
  std::vector<Graph> corpus = connected_graphs_up_to(6);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_graphs; ++i) {
    int n = 7 + static_cast<int>(rng() % 4);
    corpus.push_back(random_graph(n, std::min(1.0, mean_degree / (n - 1)), rng));
  }
  return corpus;
}

inline std::vector<GraphClass> builtin_classes() {
  return {classes::forests(), classes::diamond_free(), classes::outerplanar()};
}

namespace detail {

inline std::string describe(const GraphClass& c, const Graph& g) { return c.name + " " + to_graph6(g); }

class Timed {
 public:
  explicit Timed(CheckResult& r) : r_(r) {}
  ~Timed() { r_.elapsed_ms = clock_.elapsed_ms(); }

 private:
  CheckResult& r_;
  Stopwatch clock_;
};

// e, kappa and nu of one graph, cached by class and isomorphism type.
class MonotoneCache {
 public:
  explicit MonotoneCache(const Limits& limits) : limits_(limits) {}

  std::array<int, 3> values(std::size_t class_id, const GraphClass& c, const Graph& g) {
    auto key = std::make_pair(class_id, canonical_form(g));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::array<int, 3> v{edit_distance(c, g).value, vertex_brittleness(c, g, limits_).value, capacity(c, g).value};
    cache_.emplace(std::move(key), v);
    return v;
  }

 private:
  Limits limits_;
  std::map<std::pair<std::size_t, CanonicalForm>, std::array<int, 3>> cache_;
};

inline std::set<std::pair<int, CanonicalForm>> marked_keys(const std::vector<std::pair<Graph, VertexSet>>& pairs) {
  std::set<std::pair<int, CanonicalForm>> out;
  for (const auto& [j, s] : pairs) out.emplace(j.order(), canonical_form(j, marking(j, s)));
  return out;
}

inline VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

/// Figure 3: contracting the chord of the theta graph raises kappa and nu for forests.
inline CheckResult check_figure3() {
  CheckResult r("figure3");
  detail::Timed timer(r);
  auto f = classes::forests();
  Graph g = named::theta_fig3();
  Graph h = contract_edge(g, named::theta_fig3_edge());
  int k0 = vertex_brittleness(f, g).value, k1 = vertex_brittleness(f, h).value;
  int n0 = capacity(f, g).value, n1 = capacity(f, h).value;
  r.expect(k0 == 2, "kappa(theta) = " + std::to_string(k0) + ", expected 2");
  r.expect(k1 == 3, "kappa(theta/e) = " + std::to_string(k1) + ", expected 3");
  r.expect(n0 == 1, "nu(theta) = " + std::to_string(n0) + ", expected 1");
  r.expect(n1 == 2, "nu(theta/e) = " + std::to_string(n1) + ", expected 2");
  r.notes.push_back("kappa " + std::to_string(k0) + " -> " + std::to_string(k1) + ", nu " + std::to_string(n0) +
                    " -> " + std::to_string(n1));
  return r;
}

/// kappa_forests(K2,n) = 2 and nu_forests(K2,n) >= floor(n/2) for 3 <= n <= n_max.
inline CheckResult check_k2n_family(int n_max = 8, const Limits& limits = {}) {
  CheckResult r("k2n-family");
  detail::Timed timer(r);
  auto f = classes::forests();
  for (int n = 3; n <= n_max; ++n) {
    Graph g = named::complete_bipartite(2, n);
    int kappa = vertex_brittleness(f, g, limits).value;
    int nu = capacity(f, g).value;
    std::string name = "K2," + std::to_string(n);
    r.expect(kappa == 2, name + ": kappa = " + std::to_string(kappa) + ", expected 2");
    r.expect(nu >= n / 2, name + ": nu = " + std::to_string(nu) + ", expected >= " + std::to_string(n / 2));
    r.notes.push_back(name + ": kappa=" + std::to_string(kappa) + " nu=" + std::to_string(nu));
  }
  return r;
}

/// The hemmed sequence G_1..G_lmax: e_O = 1, eta_O >= l+1 (and stepwise
/// eta_O(G_l) >= eta_O(G_{l-1}) + 1), and G_l minus the removable edge is outerplanar.
/// Exact eta is computed within the size guard; above it a lower bound is
/// proved by exhausting the partition search below the bound, and a greedy
/// partition attaining it upgrades the bound to the exact value.
inline CheckResult check_prop_example(int l_max = 4, long long node_budget = VerifyOptions{}.partition_node_budget,
                                      const Limits& limits = {}) {
  CheckResult r("prop-example");
  detail::Timed timer(r);
  auto o = classes::outerplanar();
  int previous = -1;  // proven lower bound (or exact value) at the previous level
  for (int l = 1; l <= l_max; ++l) {
    PropExample ex = prop_example_family(l);
    const Graph& g = ex.hemmed.graph;
    std::string name = "G_" + std::to_string(l);
    int e = edit_distance(o, g).value;
    r.expect(e == 1, name + ": e = " + std::to_string(e) + ", expected 1");
    r.expect(contains(o, delete_edges(g, std::vector<Edge>{ex.removable})),
             name + " minus its removable edge is not outerplanar");

    int lower = 0;
    std::string how;
    if (g.order() <= limits.max_vertices && g.size() <= limits.max_edges) {
      lower = edge_brittleness(o, g, limits).value;
      how = "=";
    } else {
      // Exhaust the search below max(l+1, previous+1); exhausting proves the bound.
      int bound = std::max(l + 1, previous + 1);
      auto below = partition_below(o, g, bound, node_budget);
      if (below.partition) {
        r.fail(name + ": partition with " + std::to_string(below.cross_edges) + " cross edges below " +
               std::to_string(bound));
      } else if (below.budget_exhausted) {
        r.fail(name + ": node budget exhausted before proving eta >= " + std::to_string(bound));
      } else {
        lower = bound;
      }
      how = ">=";
      // A greedy partition meeting the bound makes it exact.
      if (lower > 0 && detail::greedy_partition_cross(o, g) == lower) how = "=";
      r.notes.push_back(name + ": lower-bound search used " + std::to_string(below.nodes_expanded) + " nodes");
    }
    r.expect(lower >= l + 1, name + ": eta " + how + " " + std::to_string(lower) + ", expected >= " +
                                 std::to_string(l + 1));
    if (previous >= 0) {
      r.expect(lower >= previous + 1, name + ": eta does not exceed the previous level");
    }
    r.notes.push_back(name + " (" + std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) +
                      " edges): e=" + std::to_string(e) + " eta" + how + std::to_string(lower));
    previous = lower;
  }
  return r;
}

/// {K4}-free: eta(K4) = 3 but eta(K4 with one edge subdivided) = 2.
inline CheckResult check_subdivided_k4() {
  CheckResult r("subdivided-k4");
  detail::Timed timer(r);
  auto c = make_class("K4-free", {named::complete(4)});
  int whole = edge_brittleness(c, named::complete(4)).value;
  int split = edge_brittleness(c, named::subdivided_complete(4)).value;
  r.expect(whole == 3, "eta(K4) = " + std::to_string(whole) + ", expected 3");
  r.expect(split == 2, "eta(subdivided K4) = " + std::to_string(split) + ", expected 2");
  r.notes.push_back("eta " + std::to_string(whole) + " vs " + std::to_string(split));
  return r;
}

/// Figure 4: contracting vw strictly increases e for outerplanar graphs.
inline CheckResult check_figure4() {
  CheckResult r("figure4");
  detail::Timed timer(r);
  auto o = classes::outerplanar();
  int before = edit_distance(o, named::fig4()).value;
  int after = edit_distance(o, contract_edge(named::fig4(), named::fig4_edge())).value;
  r.expect(before < after, "e(fig4) = " + std::to_string(before) + " is not below e(fig4/vw) = " +
                               std::to_string(after));
  r.notes.push_back("e " + std::to_string(before) + " -> " + std::to_string(after));
  return r;
}

/// The expected trap lists at the sizes the enumeration covers.
struct ExpectedTraps {
  std::string h_name;
  Graph h;
  int max_n;
  std::vector<std::pair<Graph, VertexSet>> pairs;
};

inline std::vector<ExpectedTraps> expected_trap_lists() {
  using detail::set_of;
  Graph k3 = named::complete(3);
  Graph d = named::diamond();
  Graph k23 = named::k23();
  return {
      {"K3", k3, 6, {{k3, {}}, {k3, set_of({0})}}},
      // D: degree-3 vertices 0, 1; degree-2 vertices 2, 3.
      {"D", d, 6, {{d, {}}, {d, set_of({2})}, {d, set_of({0})}, {d, set_of({2, 3})}}},
      // K2,3: degree-3 vertices 0, 1; degree-2 vertices 2, 3, 4.
      {"K2,3",
       k23,
       7,
       {{k23, {}},
        {k23, set_of({0})},
        {k23, set_of({2})},
        {k23, set_of({2, 3})},
        {named::k23_plus(), set_of({2, 3, 4})},
        {named::w_plus(3), set_of({2, 4, 6})}}},
  };
}

inline CheckResult check_trap_classification(int jobs = 1) {
  CheckResult r("trap-classification");
  detail::Timed timer(r);
  for (const ExpectedTraps& want : expected_trap_lists()) {
    auto found = enumerate_traps(want.h, want.h_name, want.max_n, nullptr, jobs);
    std::set<std::pair<int, CanonicalForm>> got;
    for (const auto& rec : found) got.emplace(rec.j.order(), rec.key);
    auto expected = detail::marked_keys(want.pairs);
    for (const auto& rec : found) {
      r.expect(expected.contains({rec.j.order(), rec.key}),
               want.h_name + ": unexpected trap J=" + to_graph6(rec.j) + " |S|=" + std::to_string(rec.s.size()));
      r.expect(rec.j.order() <= trap_order_bound(want.h, rec.s.size()),
               want.h_name + ": trap J=" + to_graph6(rec.j) + " exceeds the order bound");
    }
    for (const auto& [j, s] : want.pairs) {
      r.expect(got.contains({j.order(), canonical_form(j, marking(j, s))}),
               want.h_name + ": missing trap J=" + to_graph6(j) + " |S|=" + std::to_string(s.size()));
    }
    r.notes.push_back(want.h_name + " up to " + std::to_string(want.max_n) + " vertices: " +
                      std::to_string(found.size()) + " traps");
  }
  return r;
}

/// Solvers against the brute-force oracles on every connected graph with at
/// most max_n vertices, for each of the built-in classes. Certificates are
/// replayed as well.
inline CheckResult check_oracle_equivalence(int max_n = 6, const Limits& limits = {}, int jobs = 1) {
  CheckResult r("oracle-equivalence");
  detail::Timed timer(r);
  auto graphs = connected_graphs_up_to(max_n);
  auto cls = builtin_classes();
  auto per_graph = parallel_map<CheckResult>(graphs.size(), jobs, [&](std::size_t i) {
    CheckResult part;
    const Graph& g = graphs[i];
    for (const GraphClass& c : cls) {
      std::string where = detail::describe(c, g);
      auto all = all_parameters(c, g, limits);
      for (const auto* rep : {&all.e, &all.eta, &all.kappa, &all.nu}) {
        part.expect(certificate_replays(c, g, *rep),
                    where + ": " + std::string(parameter_name(rep->parameter)) + " certificate does not replay");
      }
      oracle::MembershipTable table(c, g, limits.oracle_edges);
      int e = oracle::edit_distance(table);
      part.expect(all.e.value == e, where + ": e " + std::to_string(all.e.value) + " vs oracle " + std::to_string(e));
      int eta = oracle::edge_brittleness(c, g, limits);
      part.expect(all.eta.value == eta,
                  where + ": eta " + std::to_string(all.eta.value) + " vs oracle " + std::to_string(eta));
      int nu = oracle::capacity(table);
      part.expect(all.nu.value == nu, where + ": nu " + std::to_string(all.nu.value) + " vs oracle " + std::to_string(nu));
      if (g.size() <= limits.oracle_partition_edges) {
        int kappa = oracle::vertex_brittleness(table, limits);
        part.expect(all.kappa.value == kappa,
                    where + ": kappa " + std::to_string(all.kappa.value) + " vs oracle " + std::to_string(kappa));
        int nu_def = oracle::capacity_by_partition(table, limits);
        part.expect(all.nu.value == nu_def,
                    where + ": nu " + std::to_string(all.nu.value) + " vs partition oracle " + std::to_string(nu_def));
      }
    }
    return part;
  });
  for (auto& part : per_graph) {
    r.cases += part.cases;
    for (auto& f : part.failures) r.fail(f);
  }
  r.notes.push_back(std::to_string(graphs.size()) + " graphs x " + std::to_string(cls.size()) + " classes");
  return r;
}

/// e <= eta, kappa <= 2e and nu <= e on every (class, graph) pair.
inline CheckResult check_observation_basic(const std::vector<Graph>& corpus, const std::vector<GraphClass>& cls,
                                           const Limits& limits = {}, int jobs = 1) {
  CheckResult r("observation-basic");
  detail::Timed timer(r);
  auto per_graph = parallel_map<CheckResult>(corpus.size(), jobs, [&](std::size_t i) {
    CheckResult part;
    for (const GraphClass& c : cls) {
      auto all = all_parameters(c, corpus[i], limits);
      part.expect(all.basic_inequalities_hold(),
                  detail::describe(c, corpus[i]) + ": e=" + std::to_string(all.e.value) + " eta=" +
                      std::to_string(all.eta.value) + " kappa=" + std::to_string(all.kappa.value) +
                      " nu=" + std::to_string(all.nu.value));
    }
    return part;
  });
  for (auto& part : per_graph) {
    r.cases += part.cases;
    for (auto& f : part.failures) r.fail(f);
  }
  r.notes.push_back(std::to_string(corpus.size()) + " graphs x " + std::to_string(cls.size()) + " classes");
  return r;
}

/// Every single-step topological-minor reduction (edge deletion, vertex
/// deletion, suppression) does not increase e, kappa or nu; plus the known
/// witnesses that eta, and e/kappa/nu under contraction, are not monotone.
inline CheckResult check_topminor_monotonicity(const std::vector<Graph>& corpus, const std::vector<GraphClass>& cls,
                                               const Limits& limits = {}) {
  CheckResult r("topminor-monotonicity");
  detail::Timed timer(r);
  detail::MonotoneCache cache(limits);
  static constexpr const char* kNames[] = {"e", "kappa", "nu"};
  for (const Graph& g : corpus) {
    std::vector<std::pair<std::string, Graph>> reductions;
    for (const Edge& e : g.edges()) {
      reductions.emplace_back("delete edge " + std::to_string(e.u) + "-" + std::to_string(e.v),
                              delete_edges(g, std::vector<Edge>{e}));
    }
    for (int v = 0; v < g.order(); ++v) {
      reductions.emplace_back("delete vertex " + std::to_string(v), delete_vertices(g, VertexSet::singleton(v)));
      if (g.degree(v) == 2) reductions.emplace_back("suppress " + std::to_string(v), suppress(g, v));
    }
    for (std::size_t ci = 0; ci < cls.size(); ++ci) {
      auto base = cache.values(ci, cls[ci], g);
      for (const auto& [what, h] : reductions) {
        auto reduced = cache.values(ci, cls[ci], h);
        for (int p = 0; p < 3; ++p) {
          r.expect(reduced[p] <= base[p], detail::describe(cls[ci], g) + " " + what + ": " + kNames[p] + " " +
                                              std::to_string(base[p]) + " -> " + std::to_string(reduced[p]));
        }
      }
    }
  }
  r.notes.push_back(std::to_string(corpus.size()) + " graphs x " + std::to_string(cls.size()) + " classes");

  // Documented exceptions: these must still go the "wrong" way.
  for (CheckResult witness : {check_subdivided_k4(), check_figure3(), check_figure4()}) {
    r.cases += witness.cases;
    for (auto& f : witness.failures) r.fail("non-monotonicity witness " + witness.name + ": " + f);
  }
  return r;
}

/// nu(Fan(base, s, l)) >= l, and kappa(Fan) >= l when base and base - s are connected.
inline CheckResult check_fan_lower_bounds(const GraphClass& c, const Graph& base, VertexSet s, int l_max,
                                          const std::string& label, const Limits& limits = {}) {
  CheckResult r("fan-lower-bounds");
  detail::Timed timer(r);
  if (contains(c, base)) throw ConfigurationError("fan lower bound: base graph lies in " + c.name);
  if (!is_independent(base, s)) throw ConfigurationError("fan lower bound: shared set is not independent");
  const bool kappa_applies = is_connected(base) && is_connected_within(base, base.vertices() - s);
  for (int l = 1; l <= l_max; ++l) {
    Graph g = fan(base, s, l);
    std::string name = "Fan(" + label + ", " + std::to_string(l) + ") in " + c.name;
    int nu = capacity(c, g).value;
    r.expect(nu >= l, name + ": nu = " + std::to_string(nu));
    std::string note = name + ": nu=" + std::to_string(nu);
    if (kappa_applies) {
      int kappa = vertex_brittleness(c, g, limits).value;
      r.expect(kappa >= l, name + ": kappa = " + std::to_string(kappa));
      note += " kappa=" + std::to_string(kappa);
    }
    r.notes.push_back(note);
  }
  return r;
}

/// The four fan families of the acceptance list.
inline CheckResult check_fan_suite(int l_max = 3, const Limits& limits = {}) {
  CheckResult r("fan-lower-bounds");
  detail::Timed timer(r);
  std::vector<CheckResult> parts;
  parts.push_back(
      check_fan_lower_bounds(classes::forests(), named::complete(3), VertexSet::singleton(0), l_max, "K3,{v}", limits));
  parts.push_back(check_fan_lower_bounds(classes::diamond_free(), named::diamond(), {}, l_max, "D,{}", limits));
  parts.push_back(check_fan_lower_bounds(classes::diamond_free(), named::diamond(), VertexSet::singleton(2), l_max,
                                         "D,{deg-2}", limits));
  parts.push_back(check_fan_lower_bounds(classes::outerplanar(), named::k23(), VertexSet::singleton(0), l_max,
                                         "K2,3,{deg-3}", limits));
  for (auto& p : parts) {
    r.cases += p.cases;
    for (auto& f : p.failures) r.fail(f);
    r.notes.insert(r.notes.end(), p.notes.begin(), p.notes.end());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "figure3",          "k2n-family",         "prop-example",       "subdivided-k4",
      "figure4",          "trap-classification", "oracle-equivalence", "observation-basic",
      "topminor-monotonicity", "fan-lower-bounds"};
  return names;
}

inline CheckResult run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "figure3") return check_figure3();
  if (name == "k2n-family") return check_k2n_family(opt.k2n_max, opt.limits);
  if (name == "prop-example") return check_prop_example(opt.prop_l_max, opt.partition_node_budget, opt.limits);
  if (name == "subdivided-k4") return check_subdivided_k4();
  if (name == "figure4") return check_figure4();
  if (name == "trap-classification") return check_trap_classification(opt.jobs);
  if (name == "oracle-equivalence") return check_oracle_equivalence(opt.oracle_max_n, opt.limits, opt.jobs);
  if (name == "observation-basic") {
    return check_observation_basic(default_corpus(opt.seed, opt.random_graphs, opt.mean_degree), builtin_classes(), opt.limits,
                                   opt.jobs);
  }
  if (name == "topminor-monotonicity") {
    return check_topminor_monotonicity(default_corpus(opt.seed, opt.random_graphs, opt.mean_degree), builtin_classes(), opt.limits);
  }
  if (name == "fan-lower-bounds") return check_fan_suite(opt.fan_l_max, opt.limits);
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

inline std::vector<CheckResult> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt) {
  // Suites run one after another; each parallelises internally up to opt.jobs.
  std::vector<CheckResult> out;
  for (const auto& n : names) out.push_back(run_suite(n, opt));
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace brittle
