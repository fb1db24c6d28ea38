#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfc/bench.hpp"
#include "cfc/core.hpp"
#include "cfc/generators.hpp"
#include "cfc/io.hpp"
#include "cfc/oracle.hpp"

using namespace cfc;
using nlohmann::json;

namespace {

// Usage-level problems (bad flags, malformed files) exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested check did not pass; exit 1.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto with_input(const std::string& path, F&& read) {
  if (path.empty() || path == "-") return read(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return read(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

template <class F>
void with_output(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  write(out);
}

std::size_t to_size(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

double to_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    auto v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("expected a number for ") + what + ", got '" + s + "'");
}

Hypergraph target_of(const std::string& variant, const std::string& path) {
  if (variant == "cf") return with_input(path, read_hypergraph);
  Graph g = with_input(path, read_graph);
  return variant == "on" ? open_neighborhood_hypergraph(g) : closed_neighborhood_hypergraph(g);
}

struct Budget {
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::size_t palette = 0;
  OracleBudget get() const { return {nodes, palette, seconds}; }
};

void add_budget(CLI::App* cmd, Budget& b) {
  cmd->add_option("--budget-nodes", b.nodes, "Search-node cap (0 = none)")->envname("CFC_BUDGET_NODES");
  cmd->add_option("--budget-seconds", b.seconds, "Wall-clock cap (0 = none)")->envname("CFC_BUDGET_SECONDS");
  cmd->add_option("--palette-cap", b.palette, "Largest palette a probe enumerates (0 = k n)");
}

// ---- gen ----

struct GenArgs {
  std::string family;
  std::vector<std::string> args;
  std::optional<std::uint64_t> seed;
  std::string as = "graph";
  std::string lists;
  double radius = 1;
  std::string out;
};

void run_gen(const GenArgs& a) {
  auto need = [&](std::size_t count, const char* usage) {
    if (a.args.size() != count) throw UsageError(std::string("usage: gen ") + a.family + " " + usage);
  };
  auto seed = [&] {
    if (!a.seed) throw UsageError("gen " + a.family + " is randomized and needs --seed");
    return *a.seed;
  };
  auto emit_graph = [&](const Graph& g) {
    if (a.as == "graph")
      with_output(a.out, [&](std::ostream& o) { write_graph(o, g); });
    else if (a.as == "open")
      with_output(a.out, [&](std::ostream& o) { write_hypergraph(o, open_neighborhood_hypergraph(g)); });
    else
      with_output(a.out, [&](std::ostream& o) { write_hypergraph(o, closed_neighborhood_hypergraph(g)); });
  };
  auto emit_hyper = [&](const Hypergraph& h) {
    with_output(a.out, [&](std::ostream& o) { write_hypergraph(o, h); });
  };
  auto emit_coloring = [&](const PartialColoring& c) {
    with_output(a.out, [&](std::ostream& o) { write_coloring(o, c); });
  };
  const auto& f = a.family;
  const auto& v = a.args;
  if (f == "knhalf") {
    need(1, "N");
    emit_graph(subdivided_complete(to_size(v[0], "N")));
  } else if (f == "biclique") {
    need(2, "D M");
    emit_graph(subdivided_biclique(to_size(v[0], "D"), to_size(v[1], "M")));
  } else if (f == "star") {
    need(1, "K");
    emit_graph(star(to_size(v[0], "K")));
  } else if (f == "complete") {
    need(1, "N");
    emit_graph(complete_graph(to_size(v[0], "N")));
  } else if (f == "cycle") {
    need(1, "N");
    emit_graph(cycle_graph(to_size(v[0], "N")));
  } else if (f == "path") {
    need(1, "N");
    emit_graph(path_graph(to_size(v[0], "N")));
  } else if (f == "bipartite") {
    need(2, "A B");
    emit_graph(complete_bipartite(to_size(v[0], "A"), to_size(v[1], "B")));
  } else if (f == "random-graph") {
    need(2, "N P");
    emit_graph(random_graph(to_size(v[0], "N"), to_double(v[1], "P"), seed()));
  } else if (f == "min-degree") {
    need(3, "N MAX_DEG MIN_DEG");
    emit_graph(random_graph_min_degree(to_size(v[0], "N"), to_size(v[1], "MAX_DEG"), to_size(v[2], "MIN_DEG"),
                                       seed()));
  } else if (f == "line-random") {
    need(2, "N P");
    emit_graph(line_graph(random_graph(to_size(v[0], "N"), to_double(v[1], "P"), seed())));
  } else if (f == "interval") {
    need(1, "N");
    emit_hyper(discrete_interval_hypergraph(to_size(v[0], "N")));
  } else if (f == "random-hypergraph") {
    need(4, "N M MIN_SIZE MAX_SIZE");
    emit_hyper(random_hypergraph(to_size(v[0], "N"), to_size(v[1], "M"), to_size(v[2], "MIN_SIZE"),
                                 to_size(v[3], "MAX_SIZE"), seed()));
  } else if (f == "scenario") {
    need(1, "CSV");
    auto spec = with_input(v[0], [&](std::istream& in) { return read_scenario_csv(in, a.radius); });
    emit_hyper(scenario_hypergraph(spec));
  } else if (f == "lists") {
    need(3, "N K PALETTE");
    auto lists = random_lists(to_size(v[0], "N"), to_size(v[1], "K"), to_size(v[2], "PALETTE"), seed());
    with_output(a.out, [&](std::ostream& o) { write_lists(o, lists); });
  } else if (f == "prop3-cfon3") {
    need(2, "D M");
    emit_coloring(prop3_cfon3_coloring(to_size(v[0], "D"), to_size(v[1], "M")));
  } else if (f == "prop3-cfonstar") {
    need(2, "D M");
    if (a.lists.empty()) throw UsageError("gen prop3-cfonstar needs --lists");
    auto lists = with_input(a.lists, read_lists);
    emit_coloring(prop3_cfonstar_coloring(to_size(v[0], "D"), to_size(v[1], "M"), lists));
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
}

// ---- oracle ----

struct OracleArgs {
  std::string input;
  std::string variant = "cf";
  std::string mode = "full";
  std::string lists;
  std::size_t k = 2;
  std::string out;
  Budget budget;
};

void run_oracle_chi(const OracleArgs& a) {
  Hypergraph h = target_of(a.variant, a.input);
  auto r = chi_cf(h, mode_from_string(a.mode), a.budget.get());
  if (!r.value) {
    std::cout << "indeterminate >= " << r.lower_bound << "\n";
    throw CheckFailed("budget exhausted after " + std::to_string(r.nodes) + " nodes");
  }
  std::cout << *r.value << "\n";
  if (!a.out.empty()) with_output(a.out, [&](std::ostream& o) { write_coloring(o, *r.witness); });
}

void run_oracle_list(const OracleArgs& a) {
  if (a.lists.empty()) throw UsageError("oracle list needs --lists");
  Hypergraph h = target_of(a.variant, a.input);
  auto lists = with_input(a.lists, read_lists);
  if (lists.size() != h.num_vertices()) throw UsageError("list file does not match the instance size");
  auto r = list_cf_color(h, lists, mode_from_string(a.mode), a.budget.get());
  std::cout << to_string(r.verdict) << "\n";
  if (r.verdict != Verdict::Sat) throw CheckFailed(std::string("list coloring ") + to_string(r.verdict));
  with_output(a.out.empty() ? "-" : a.out, [&](std::ostream& o) { write_coloring(o, *r.coloring); });
}

void report_probe(const ProbeResult& r, const OracleArgs& a) {
  std::cout << to_string(r.verdict) << " explored=" << r.explored << " palette=" << r.palette << "\n";
  if (r.counterexample && !a.out.empty())
    with_output(a.out, [&](std::ostream& o) { write_lists(o, *r.counterexample); });
  if (r.verdict == ProbeVerdict::Indeterminate) throw CheckFailed("probe did not finish within its budget");
}

void run_oracle_probe(const OracleArgs& a) {
  Hypergraph h = target_of(a.variant, a.input);
  report_probe(choice_probe(h, a.k, mode_from_string(a.mode), a.budget.get()), a);
}

void run_oracle_graph_probe(const OracleArgs& a) {
  Graph g = with_input(a.input, read_graph);
  report_probe(graph_choice_probe(g, a.k, a.budget.get()), a);
}

void run_oracle_chromatic(const OracleArgs& a) {
  Graph g = with_input(a.input, read_graph);
  std::cout << chromatic_number(g) << "\n";
}

// ---- color ----

struct ColorArgs {
  std::string input;
  std::string algo;
  std::string variant;
  std::string mode = "desk";
  std::optional<std::uint64_t> seed;
  std::string lists;
  std::optional<std::size_t> K;
  std::optional<std::size_t> t;
  double q_scale = 3;
  double c_T = 10;
  std::size_t restarts = 1000;
  std::size_t list_factor = 32;
  bool requirement = false;
  std::string out;
  std::string summary;
  std::string diagnostics;
};

RunConfig config_of(const ColorArgs& a) {
  RunConfig cfg;
  cfg.mode = param_mode_from_string(a.mode);
  cfg.seed = a.seed.value_or(0);
  cfg.K = a.K;
  cfg.t = a.t;
  cfg.rounds.mode = cfg.mode;
  cfg.rounds.q_scale = a.q_scale;
  cfg.rounds.c_T = a.c_T;
  cfg.rounds.restarts = a.restarts;
  cfg.list_factor = a.list_factor;
  return cfg;
}

json diagnostics_json(const std::vector<AttemptDiagnostics>& diags) {
  json arr = json::array();
  for (std::size_t i = 0; i < diags.size(); ++i)
    arr.push_back({{"attempt", i}, {"unwitnessed", diags[i].unwitnessed},
                   {"incomplete", diags[i].incomplete}, {"resamples", diags[i].resamples}});
  return arr;
}

template <class Instance>
void run_color(const ColorArgs& a, const std::string& algo, const Instance& instance) {
  RunConfig cfg = config_of(a);
  if (a.requirement) {
    std::cout << required_list_size(algo, instance, cfg) << "\n";
    return;
  }
  if (!a.seed) throw UsageError("color is randomized and needs --seed");
  if (a.lists.empty()) throw UsageError("color needs --lists (see --requirement for the size)");
  auto lists = with_input(a.lists, read_lists);
  RunOutput out;
  try {
    out = run_algorithm(algo, instance, lists, cfg);
  } catch (const ColoringFailure& e) {
    if (!a.diagnostics.empty())
      with_output(a.diagnostics, [&](std::ostream& o) { o << diagnostics_json(e.diagnostics()).dump(2) << "\n"; });
    throw CheckFailed(e.what());
  }
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
  auto report = verify(out.target, out.coloring, out.mode, lists);
  if (!report.ok) throw CheckFailed("colorer output failed the independent verification");
  with_output(a.out, [&](std::ostream& o) { write_coloring(o, out.coloring); });
  json summary = {{"algorithm", algo}, {"mode", a.mode}, {"seed", *a.seed},
                  {"colors", out.coloring.num_distinct_colors()}, {"colored", out.coloring.num_colored()},
                  {"restarts", out.restarts}, {"resamples", out.resamples}, {"verified", true}};
  for (const auto& [k, v] : out.summary) summary["summary"][k] = v;
  if (!a.summary.empty())
    with_output(a.summary, [&](std::ostream& o) { o << summary.dump(2) << "\n"; });
  else if (!a.out.empty() && a.out != "-")
    std::cout << summary.dump() << "\n";
  if (!a.diagnostics.empty())
    with_output(a.diagnostics, [&](std::ostream& o) { o << diagnostics_json(out.diagnostics).dump(2) << "\n"; });
}

void run_color_lll(const ColorArgs& a) {
  if (!is_hypergraph_algorithm(a.algo)) throw UsageError("unknown hypergraph algorithm '" + a.algo + "'");
  run_color(a, a.algo, with_input(a.input, read_hypergraph));
}

void run_color_graph(const ColorArgs& a) {
  std::string algo = a.algo;
  if (algo == "min-degree" || algo == "dense") {
    if (a.variant != "on" && a.variant != "cn") throw UsageError(algo + " needs --variant on|cn");
    algo += "-" + a.variant;
  }
  if (!is_graph_algorithm(algo)) throw UsageError("unknown graph algorithm '" + a.algo + "'");
  run_color(a, algo, with_input(a.input, read_graph));
}

// ---- verify ----

struct VerifyArgs {
  std::string input;
  std::string coloring;
  std::string variant = "cf";
  std::string mode = "full";
  std::string lists;
};

void run_verify(const VerifyArgs& a) {
  Hypergraph h = target_of(a.variant, a.input);
  auto c = with_input(a.coloring, [&](std::istream& in) { return read_coloring(in, h.num_vertices()); });
  VerifyReport r = a.lists.empty() ? verify(h, c, mode_from_string(a.mode))
                                   : verify(h, c, mode_from_string(a.mode), with_input(a.lists, read_lists));
  for (auto e : r.violated_edges) {
    std::cout << "edge " << e << " {";
    auto edge = h.edge(e);
    for (std::size_t i = 0; i < edge.size(); ++i) std::cout << (i ? " " : "") << edge[i];
    std::cout << "} has no uniquely colored vertex\n";
  }
  if (r.mode == Mode::Full)
    for (auto v : r.uncolored) std::cout << "vertex " << v << " is uncolored\n";
  for (auto v : r.list_violations) std::cout << "vertex " << v << " uses a color outside its list\n";
  if (!r.ok) throw CheckFailed("coloring is not valid");
  std::cout << "ok\n";
}

// ---- bench ----

struct BenchArgs {
  std::string plan;
  std::string out;
  std::size_t jobs = 1;
};

void run_bench(const BenchArgs& a) {
  auto plan = with_input(a.plan, parse_plan);
  auto records = run_plan(plan, a.jobs);
  auto emit = [&](std::ostream& o, bool header) {
    if (header) write_csv_header(o);
    for (const auto& r : records) write_csv_row(o, r);
  };
  if (a.out.empty() || a.out == "-") {
    emit(std::cout, true);
  } else {
    const bool fresh = !std::filesystem::exists(a.out) || std::filesystem::file_size(a.out) == 0;
    std::ofstream o(a.out, std::ios::app);
    if (!o) throw UsageError("cannot write " + a.out);
    emit(o, fresh);
  }
  std::size_t bad = 0;
  for (const auto& r : records) bad += r.outcome != "ok";
  std::cerr << records.size() << " rows, " << bad << " not ok\n";
  if (bad) throw CheckFailed(std::to_string(bad) + " runs did not end ok");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List conflict-free coloring toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate instances, lists and reference colorings");
  g->add_option("family", gen.family, "knhalf biclique star complete cycle path bipartite random-graph "
                                      "min-degree line-random interval random-hypergraph scenario lists "
                                      "prop3-cfon3 prop3-cfonstar")
      ->required();
  g->add_option("args", gen.args, "Family arguments");
  g->add_option("--seed", gen.seed, "Seed for randomized families");
  g->add_option("--as", gen.as, "Emit a graph, or its open/closed neighborhood hypergraph")
      ->check(CLI::IsMember({"graph", "open", "closed"}));
  g->add_option("--lists", gen.lists, "List file (prop3-cfonstar)");
  g->add_option("--radius", gen.radius, "Coverage radius (scenario)");
  g->add_option("-o,--out", gen.out, "Output file (default stdout)");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact small-instance oracles");
  o->require_subcommand(1);
  auto variant_opt = [&](CLI::App* cmd) {
    cmd->add_option("input", oracle.input, "Instance file (default stdin)");
    cmd->add_option("--variant", oracle.variant, "cf: hypergraph input; on/cn: graph input")
        ->check(CLI::IsMember({"cf", "on", "cn"}));
    cmd->add_option("--mode", oracle.mode, "full or partial")->check(CLI::IsMember({"full", "partial"}));
    cmd->add_option("-o,--out", oracle.out, "Witness or counterexample file");
    add_budget(cmd, oracle.budget);
  };
  auto* o_chi = o->add_subcommand("chi", "CF chromatic number");
  variant_opt(o_chi);
  auto* o_list = o->add_subcommand("list", "Decide list CF colorability");
  variant_opt(o_list);
  o_list->add_option("--lists", oracle.lists, "List file")->required();
  auto* o_probe = o->add_subcommand("probe", "k-choosability probe");
  variant_opt(o_probe);
  o_probe->add_option("--k", oracle.k, "List size")->required();
  auto* o_gprobe = o->add_subcommand("graph-probe", "Proper k-choosability probe");
  o_gprobe->add_option("input", oracle.input, "Graph file (default stdin)");
  o_gprobe->add_option("--k", oracle.k, "List size")->required();
  o_gprobe->add_option("-o,--out", oracle.out, "Counterexample file");
  add_budget(o_gprobe, oracle.budget);
  auto* o_chrom = o->add_subcommand("chromatic", "Chromatic number of a graph");
  o_chrom->add_option("input", oracle.input, "Graph file (default stdin)");

  ColorArgs color;
  auto* c = app.add_subcommand("color", "Randomized and composite colorers");
  c->require_subcommand(1);
  auto color_common = [&](CLI::App* cmd) {
    cmd->add_option("input", color.input, "Instance file (default stdin)");
    cmd->add_option("--mode", color.mode, "paper or desk")->check(CLI::IsMember({"paper", "desk"}));
    cmd->add_option("--seed", color.seed, "Seed (required)");
    cmd->add_option("--lists", color.lists, "List file");
    cmd->add_option("--q-scale", color.q_scale, "Desk round-probability multiplier");
    cmd->add_option("--c-T", color.c_T, "Round-cap constant");
    cmd->add_option("--restarts", color.restarts, "Restart budget");
    cmd->add_flag("--requirement", color.requirement, "Print the required list size and exit");
    cmd->add_option("-o,--out", color.out, "Coloring file (default stdout)");
    cmd->add_option("--summary", color.summary, "JSON summary file");
    cmd->add_option("--json-diagnostics", color.diagnostics, "Per-attempt defect counts as JSON");
  };
  auto* c_lll = c->add_subcommand("lll", "Color a hypergraph");
  color_common(c_lll);
  c_lll->add_option("--algo", color.algo, "pach-tardos, near-uniform or list-cf")->required();
  c_lll->add_option("--t", color.t, "Round-process t");
  c_lll->add_option("--list-factor", color.list_factor, "Desk near-uniform list factor");
  auto* c_graph = c->add_subcommand("graph", "Color a graph's neighborhoods");
  color_common(c_graph);
  c_graph->add_option("--algo", color.algo, "cfcn-general, cfon-claw, min-degree or dense")->required();
  c_graph->add_option("--variant", color.variant, "on or cn (min-degree, dense)");
  c_graph->add_option("--K", color.K, "cfcn-general list constant");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a coloring");
  v->add_option("input", ver.input, "Instance file")->required();
  v->add_option("coloring", ver.coloring, "Coloring file")->required();
  v->add_option("--variant", ver.variant, "cf, on or cn")->check(CLI::IsMember({"cf", "on", "cn"}));
  v->add_option("--mode", ver.mode, "full or partial")->check(CLI::IsMember({"full", "partial"}));
  v->add_option("--lists", ver.lists, "Also check list compliance");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a benchmark plan");
  b->add_option("plan", bench.plan, "Plan file")->required();
  b->add_option("-o,--out", bench.out, "CSV file to append to (default stdout)");
  b->add_option("--jobs", bench.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (g->parsed()) run_gen(gen);
    else if (o_chi->parsed()) run_oracle_chi(oracle);
    else if (o_list->parsed()) run_oracle_list(oracle);
    else if (o_probe->parsed()) run_oracle_probe(oracle);
    else if (o_gprobe->parsed()) run_oracle_graph_probe(oracle);
    else if (o_chrom->parsed()) run_oracle_chromatic(oracle);
    else if (c_lll->parsed()) run_color_lll(color);
    else if (c_graph->parsed()) run_color_graph(color);
    else if (v->parsed()) run_verify(ver);
    else if (b->parsed()) run_bench(bench);
  } catch (const CheckFailed& e) {
    std::cerr << "cfc: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "cfc: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "cfc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cfc: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
