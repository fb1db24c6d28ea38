#include "cfc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "cfc/core.hpp"
#include "cfc/generators.hpp"
#include "cfc/oracle.hpp"
#include "rng.hpp"

namespace cfc {
namespace {

const std::vector<std::string> kGraphAlgorithms = {"cfcn-general",  "cfon-claw", "min-degree-on",
                                                   "min-degree-cn", "dense-on",  "dense-cn"};
const std::vector<std::string> kHypergraphAlgorithms = {"pach-tardos", "near-uniform", "list-cf"};

bool closed_variant(const std::string& algo) { return algo.ends_with("-cn"); }

std::size_t default_t(const Hypergraph& h, const RunConfig& cfg) {
  if (cfg.t) return *cfg.t;
  return h.num_edges() > 0 && stats(h).min_edge >= 3 ? 2 : 1;
}

PachTardosParams pach_params(const Hypergraph& h, const RunConfig& cfg) {
  return cfg.rounds.params(default_t(h, cfg), stats(h).overlap);
}

NearUniformParams near_params(const Hypergraph& h, const RunConfig& cfg) {
  auto s = stats(h);
  if (cfg.mode == ParamMode::Paper) return NearUniformParams::paper(s.max_edge, s.overlap);
  return NearUniformParams::desk(s.min_edge, s.max_edge, s.overlap, cfg.list_factor);
}

[[noreturn]] void unknown(const std::string& algo) { throw InvalidInput("unknown algorithm '" + algo + "'"); }

}  // namespace

bool is_graph_algorithm(const std::string& algo) {
  return std::find(kGraphAlgorithms.begin(), kGraphAlgorithms.end(), algo) != kGraphAlgorithms.end();
}

bool is_hypergraph_algorithm(const std::string& algo) {
  return std::find(kHypergraphAlgorithms.begin(), kHypergraphAlgorithms.end(), algo) !=
         kHypergraphAlgorithms.end();
}

std::size_t required_list_size(const std::string& algo, const Graph& g, const RunConfig& cfg) {
  if (algo == "cfcn-general") return cfcn_list_size(g, cfg.K.value_or(cfcn_min_K(g, cfg.rounds)));
  if (algo == "cfon-claw") {
    ClawOptions opt = cfg.claw;
    opt.mode = cfg.mode;
    return cfon_claw_plan(g, opt).r;
  }
  if (algo.starts_with("min-degree-")) return min_degree_params(g, closed_variant(algo), cfg.rounds).rounds;
  if (algo.starts_with("dense-")) {
    DenseOptions opt = cfg.dense;
    opt.mode = cfg.mode;
    return dense_list_size(g, closed_variant(algo), opt);
  }
  unknown(algo);
}

std::size_t required_list_size(const std::string& algo, const Hypergraph& h, const RunConfig& cfg) {
  if (algo == "pach-tardos") return pach_params(h, cfg).rounds;
  if (algo == "near-uniform") return near_params(h, cfg).list_size;
  if (algo == "list-cf") return stats(h).max_degree + 1;
  unknown(algo);
}

RunOutput run_algorithm(const std::string& algo, const Graph& g, const ListAssignment& lists,
                        const RunConfig& cfg) {
  RunOutput out;
  out.mode = Mode::Partial;
  if (algo == "cfcn-general") {
    RoundOptions opt = cfg.rounds;
    opt.mode = cfg.mode;
    auto res = cfcn_general(g, lists, cfg.K.value_or(cfcn_min_K(g, opt)), opt, cfg.seed);
    const auto& d = res.decomposition;
    out.coloring = std::move(res.coloring);
    out.target = closed_neighborhood_hypergraph(g);
    out.restarts = res.h1_run.attempts;
    out.warnings = res.h1_run.warnings;
    out.diagnostics = res.h1_run.diagnostics;
    out.summary = {{"A", d.A.size()},   {"B", d.B.size()},         {"A1", d.A1.size()},
                   {"A2", d.A2.size()}, {"theta", d.theta},        {"K", d.K},
                   {"K_min", d.K_min},  {"rounds", d.rounds},      {"h1_colors", res.h1_colors},
                   {"h2_colors", res.h2_colors}};
    return out;
  }
  if (algo == "cfon-claw") {
    ClawOptions opt = cfg.claw;
    opt.mode = cfg.mode;
    auto res = cfon_claw(g, lists, opt, cfg.seed);
    const auto& d = res.decomposition;
    out.coloring = std::move(res.coloring);
    out.target = open_neighborhood_hypergraph(g);
    out.resamples = res.resamples;
    out.summary = {{"k", d.plan.k},         {"b", d.plan.b},          {"z", d.plan.z},
                   {"r", d.plan.r},         {"A_L", d.A_L.size()},    {"A_H", d.A_H.size()},
                   {"X", d.X.size()},       {"B", d.B.size()},        {"C", d.C.size()},
                   {"classes", d.classes.size()}, {"stage1_extra", d.stage1_extra.size()}};
    for (std::size_t j = 0; j < 5; ++j)
      out.summary.emplace_back("H" + std::to_string(j + 1) + "_colors", res.stage_colors[j]);
    return out;
  }
  if (algo.starts_with("min-degree-")) {
    RoundOptions opt = cfg.rounds;
    opt.mode = cfg.mode;
    const bool closed = closed_variant(algo);
    auto res = closed ? cfcn_min_degree(g, lists, opt, cfg.seed) : cfon_min_degree(g, lists, opt, cfg.seed);
    out.coloring = std::move(res.coloring);
    out.target = closed ? closed_neighborhood_hypergraph(g) : open_neighborhood_hypergraph(g);
    out.restarts = res.run.attempts;
    out.warnings = res.run.warnings;
    out.diagnostics = res.run.diagnostics;
    out.summary = {{"t", res.params.t}, {"gamma", res.params.gamma}, {"rounds", res.params.rounds}};
    return out;
  }
  if (algo.starts_with("dense-")) {
    DenseOptions opt = cfg.dense;
    opt.mode = cfg.mode;
    const bool closed = closed_variant(algo);
    auto res = closed ? cfcn_dense_min_degree(g, lists, opt, cfg.seed)
                      : cfon_dense_min_degree(g, lists, opt, cfg.seed);
    out.coloring = std::move(res.coloring);
    out.target = closed ? closed_neighborhood_hypergraph(g) : open_neighborhood_hypergraph(g);
    out.resamples = res.resamples;
    out.restarts = res.core.attempts;
    out.summary = {{"fallback", res.fallback ? 1u : 0u}, {"core", res.core.vertices.size()}};
    return out;
  }
  unknown(algo);
}

RunOutput run_algorithm(const std::string& algo, const Hypergraph& h, const ListAssignment& lists,
                        const RunConfig& cfg) {
  RunOutput out;
  out.target = h;
  if (algo == "pach-tardos") {
    auto p = pach_params(h, cfg);
    auto run = pach_tardos_color(h, lists, p, cfg.seed);
    out.coloring = std::move(run.coloring);
    out.mode = Mode::Partial;
    out.restarts = run.attempts;
    out.warnings = run.warnings;
    out.diagnostics = run.diagnostics;
    out.summary = {{"t", p.t}, {"gamma", p.gamma}, {"rounds", p.rounds}};
    return out;
  }
  if (algo == "near-uniform") {
    auto p = near_params(h, cfg);
    auto run = near_uniform_color(h, lists, p, cfg.seed);
    out.coloring = std::move(run.coloring);
    out.mode = Mode::Full;
    out.resamples = run.resamples;
    out.diagnostics = run.diagnostics;
    out.summary = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"list_size", p.list_size}};
    return out;
  }
  if (algo == "list-cf") {
    auto res = list_cf_color(h, lists, Mode::Partial);
    if (res.verdict == Verdict::Indeterminate) throw BudgetExhausted("list coloring search hit its budget", 1);
    if (res.verdict == Verdict::Unsat) throw StageFailure("list-cf", "no list CF* coloring exists");
    out.coloring = std::move(*res.coloring);
    out.mode = Mode::Partial;
    out.summary = {{"nodes", static_cast<std::size_t>(res.nodes)}, {"greedy", res.greedy ? 1u : 0u}};
    return out;
  }
  unknown(algo);
}

std::vector<PlanBlock> parse_plan(std::istream& in) {
  std::vector<PlanBlock> plan;
  std::string line;
  std::size_t number = 0;
  bool open = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto a = line.find_first_not_of(" \t");
    if (a == std::string::npos) {
      open = false;
      continue;
    }
    if (line[a] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("plan line " + std::to_string(number) + ": expected key=value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (!open) {
      plan.push_back({number, {}});
      open = true;
    }
    if (!plan.back().values.emplace(key, value).second)
      throw InvalidInput("plan line " + std::to_string(number) + ": duplicate key '" + key + "'");
  }
  return plan;
}

namespace {

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::uint64_t to_u64(const PlanBlock& b, const std::string& text) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("plan block at line " + std::to_string(b.line) + ": bad integer '" + text + "'");
}

// `1,2,5` or `1..5`.
std::vector<std::uint64_t> integers(const PlanBlock& b, const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split(text)) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_u64(b, item));
    } else {
      auto lo = to_u64(b, item.substr(0, dots)), hi = to_u64(b, item.substr(dots + 2));
      if (lo > hi) throw InvalidInput("plan block at line " + std::to_string(b.line) + ": empty range '" + item + "'");
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

struct Job {
  std::string family;
  std::string instance;
  std::string algorithm;
  std::uint64_t seed = 0;
  const PlanBlock* block = nullptr;
  std::size_t n = 0;
};

std::string get(const PlanBlock& b, const std::string& key, const std::string& fallback = "") {
  auto it = b.values.find(key);
  if (it != b.values.end()) return it->second;
  if (!fallback.empty()) return fallback;
  throw InvalidInput("plan block at line " + std::to_string(b.line) + ": missing key '" + key + "'");
}

const std::vector<std::string> kGraphFamilies = {"random-graph", "min-degree", "line-random", "knhalf",
                                                 "complete"};
const std::vector<std::string> kHypergraphFamilies = {"random-hypergraph", "interval"};

Graph drop_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  return g.induced(keep);
}

RunRecord run_job(const Job& job) {
  const PlanBlock& b = *job.block;
  RunRecord rec;
  rec.instance = job.instance;
  rec.algorithm = job.algorithm;
  rec.seed = job.seed;
  RunConfig cfg;
  cfg.mode = param_mode_from_string(get(b, "mode", "desk"));
  cfg.seed = job.seed;
  if (b.values.count("K")) cfg.K = to_u64(b, b.values.at("K"));
  if (b.values.count("t")) cfg.t = to_u64(b, b.values.at("t"));
  rec.mode = to_string(cfg.mode);
  const std::uint64_t gseed = detail::derive_seed(to_u64(b, get(b, "graph_seed", "1")), job.n);
  const std::uint64_t lseed = detail::derive_seed(job.seed, 0x115715);

  auto start = std::chrono::steady_clock::now();
  try {
    RunOutput out;
    ListAssignment lists;
    std::size_t r = 0;
    auto make_lists = [&](std::size_t n, std::size_t size) {
      r = size;
      return random_lists(n, size, 2 * size, lseed);
    };
    const std::string& f = job.family;
    if (std::find(kGraphFamilies.begin(), kGraphFamilies.end(), f) != kGraphFamilies.end()) {
      Graph g;
      if (f == "random-graph")
        g = drop_isolated(random_graph(job.n, std::stod(get(b, "p")), gseed));
      else if (f == "min-degree")
        g = random_graph_min_degree(job.n, to_u64(b, get(b, "max_deg")), to_u64(b, get(b, "min_deg")), gseed);
      else if (f == "line-random")
        g = drop_isolated(line_graph(random_graph(job.n, std::stod(get(b, "p")), gseed)));
      else if (f == "knhalf")
        g = subdivided_complete(job.n);
      else
        g = complete_graph(job.n);
      if (g.num_vertices() == 0) throw InvalidInput("instance has no vertices");
      lists = make_lists(g.num_vertices(), required_list_size(job.algorithm, g, cfg));
      out = run_algorithm(job.algorithm, g, lists, cfg);
    } else {
      Hypergraph h = f == "interval" ? discrete_interval_hypergraph(job.n)
                                     : random_hypergraph(job.n, to_u64(b, get(b, "m")), to_u64(b, get(b, "lo")),
                                                         to_u64(b, get(b, "hi")), gseed);
      lists = make_lists(h.num_vertices(), required_list_size(job.algorithm, h, cfg));
      out = run_algorithm(job.algorithm, h, lists, cfg);
    }
    rec.params = "lists=" + std::to_string(r);
    for (const auto& [k, v] : out.summary)
      if (k == "K" || k == "t" || k == "rounds" || k == "b" || k == "z") rec.params += ";" + k + "=" + std::to_string(v);
    rec.colors = out.coloring.num_distinct_colors();
    rec.restarts = out.restarts;
    rec.resamples = out.resamples;
    rec.verified = verify(out.target, out.coloring, out.mode, lists).ok;
    rec.outcome = rec.verified ? "ok" : "fail";
    if (!rec.verified) rec.note = "verification failed";
  } catch (const BudgetExhausted& e) {
    rec.outcome = "fail";
    rec.restarts = e.attempts();
    rec.note = e.what();
  } catch (const std::exception& e) {
    rec.outcome = "fail";
    rec.note = e.what();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::vector<RunRecord> run_plan(const std::vector<PlanBlock>& plan, std::size_t jobs) {
  std::vector<Job> work;
  for (const auto& b : plan) {
    const std::string family = get(b, "family");
    const bool graph_family = std::find(kGraphFamilies.begin(), kGraphFamilies.end(), family) != kGraphFamilies.end();
    const bool hyper_family =
        std::find(kHypergraphFamilies.begin(), kHypergraphFamilies.end(), family) != kHypergraphFamilies.end();
    if (!graph_family && !hyper_family)
      throw InvalidInput("plan block at line " + std::to_string(b.line) + ": unknown family '" + family + "'");
    auto algorithms = split(get(b, "algorithms"));
    for (const auto& a : algorithms) {
      if (graph_family ? !is_graph_algorithm(a) : !is_hypergraph_algorithm(a))
        throw InvalidInput("plan block at line " + std::to_string(b.line) + ": algorithm '" + a +
                           "' does not apply to family '" + family + "'");
    }
    param_mode_from_string(get(b, "mode", "desk"));
    auto seeds = integers(b, get(b, "seeds"));
    for (auto n : integers(b, get(b, "n"))) {
      std::string instance = family + "-" + std::to_string(n) + "-g" + get(b, "graph_seed", "1");
      for (const auto& a : algorithms)
        for (auto s : seeds) work.push_back({family, instance, a, s, &b, static_cast<std::size_t>(n)});
    }
  }
  std::vector<RunRecord> records(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) records[i] = run_job(work[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(1, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return records;
}

void write_csv_header(std::ostream& out) {
  out << "instance,algorithm,mode,seed,params,outcome,colors,restarts,resamples,verified,wall_ms,note\n";
}

void write_csv_row(std::ostream& out, const RunRecord& r) {
  std::ostringstream ms;
  ms.setf(std::ios::fixed);
  ms.precision(3);
  ms << r.wall_ms;
  out << csv_cell(r.instance) << ',' << r.algorithm << ',' << r.mode << ',' << r.seed << ','
      << csv_cell(r.params) << ',' << r.outcome << ',' << r.colors << ',' << r.restarts << ','
      << r.resamples << ',' << (r.verified ? "true" : "false") << ',' << ms.str() << ','
      << csv_cell(r.note) << '\n';
}

}  // namespace cfc
