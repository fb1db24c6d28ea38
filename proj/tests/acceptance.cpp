// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfc/bench.hpp"
#include "cfc/composite.hpp"
#include "cfc/core.hpp"
#include "cfc/generators.hpp"
#include "cfc/io.hpp"
#include "cfc/lll.hpp"
#include "cfc/oracle.hpp"
#include "support.hpp"

using namespace cfc;
using cfc::testing::all_edges_ok;
using cfc::testing::as_ints;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

std::string str(std::size_t v) { return std::to_string(v); }

std::size_t chi_value(const ChiResult& r) { return r.value ? *r.value : SIZE_MAX; }

Outcome ac1() {
  Outcome o;
  for (std::size_t n = 2; n <= 5; ++n) {
    auto g = subdivided_complete(n);
    auto on = chi_value(chi_on(g, Mode::Full));
    auto cn = chi_value(chi_cn(g, Mode::Full));
    o.expect(on == n, "chi_ON(K_" + str(n) + "^1/2) = " + str(on));
    o.expect(cn == 2, "chi_CN(K_" + str(n) + "^1/2) = " + str(cn));
  }
  o.detail = o.ok ? "n=2..5 exact" : o.detail;
  return o;
}

Outcome ac2() {
  Outcome o;
  for (std::size_t k = 2; k <= 6; ++k) {
    auto g = star(k);
    const std::string tag = "K_{1," + str(k) + "}";
    o.expect(chi_value(chi_on(g, Mode::Partial)) == 1, tag + " chi*_ON");
    o.expect(chi_value(chi_on(g, Mode::Full)) == 2, tag + " chi_ON");
    o.expect(chi_value(chi_cn(g, Mode::Partial)) == 1, tag + " chi*_CN");
    o.expect(chi_value(chi_cn(g, Mode::Full)) == 2, tag + " chi_CN");
    for (auto h : {open_neighborhood_hypergraph(g), closed_neighborhood_hypergraph(g)}) {
      o.expect(choice_probe(h, 2, Mode::Full).verdict == ProbeVerdict::Choosable, tag + " not 2-choosable");
      o.expect(choice_probe(h, 1, Mode::Full).verdict == ProbeVerdict::Counterexample, tag + " 1-choosable");
    }
  }
  o.detail = o.ok ? "k=2..6, ch_ON = ch_CN = 2 by probe" : o.detail;
  return o;
}

Outcome ac3() {
  Outcome o;
  auto g = subdivided_biclique(2, 4);
  auto h = open_neighborhood_hypergraph(g);
  auto c3 = prop3_cfon3_coloring(2, 4);
  o.expect(c3.is_total() && verify(h, c3, Mode::Full).ok, "3-coloring does not verify");
  o.expect(c3.num_distinct_colors() <= 3, "3-coloring uses " + str(c3.num_distinct_colors()) + " colors");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto lists = random_lists(g.num_vertices(), 2, 4, seed);
    auto c = prop3_cfonstar_coloring(2, 4, lists);
    o.expect(verify(h, c, Mode::Partial, lists).ok && all_edges_ok(h, as_ints(c)),
             "CFON* list coloring fails for seed " + std::to_string(seed));
  }
  auto probe = choice_probe(h, 2, Mode::Full);
  o.expect(probe.verdict == ProbeVerdict::Counterexample, std::string("probe: ") + to_string(probe.verdict));
  if (probe.counterexample) {
    auto check = list_cf_color(h, *probe.counterexample, Mode::Full, {}, false);
    o.expect(check.verdict == Verdict::Unsat, "counterexample is colorable");
  }
  if (o.ok) o.detail = "3 colors; 50/50 assignments; counterexample after " + std::to_string(probe.explored) + " nodes";
  return o;
}

Outcome ac4() {
  Outcome o;
  const std::size_t expect[] = {2, 3, 4};
  std::size_t i = 0;
  for (std::size_t n : {2, 4, 8}) {
    auto v = chi_value(chi_cf(discrete_interval_hypergraph(n), Mode::Full));
    o.expect(v == expect[i], "chi_CF(H_" + str(n) + ") = " + str(v));
    o.expect(v == static_cast<std::size_t>(std::floor(std::log2(n))) + 1, "floor(log2 n)+1 mismatch");
    ++i;
  }
  if (o.ok) o.detail = "2, 3, 4";
  return o;
}

Outcome ac5() {
  Outcome o;
  cfc::testing::Gen gen(5005);
  std::size_t greedy_free = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto h = gen.hypergraph(gen.uniform(2, 12), gen.uniform(1, 10), 5);
    auto full = chi_value(chi_cf(h, Mode::Full));
    auto part = chi_value(chi_cf(h, Mode::Partial));
    o.expect(full != SIZE_MAX && part != SIZE_MAX, "oracle did not finish");
    o.expect(full <= part + 1, "chi_CF > chi*_CF + 1 on trial " + std::to_string(trial));
    auto d = stats(h).max_degree;
    auto lists = random_lists(h.num_vertices(), d + 1, 2 * (d + 1), trial);
    auto r = list_cf_color(h, lists, Mode::Full, {}, false);
    o.expect(r.verdict == Verdict::Sat && r.coloring && verify(h, *r.coloring, Mode::Full, lists).ok,
             "Delta+1 lists not colorable on trial " + std::to_string(trial));
    greedy_free += !r.greedy;
  }
  if (o.ok) o.detail = "200 instances, " + str(greedy_free) + " decided by exact search";
  return o;
}

Outcome ac6() {
  Outcome o;
  const std::size_t n = 16, z = 2;
  std::size_t runs = 0;
  for (std::size_t t : {2, 3, 5}) {
    const std::size_t r = partition_list_size(n, z, t);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto lists = random_lists(n, r, 3 * r, seed);
      std::vector<std::size_t> targets(n);
      for (Vertex v = 0; v < n; ++v) targets[v] = (v * 7 + seed) % t;
      auto p = palette_partition(lists, z, t, targets, seed);
      ++runs;
      const std::size_t lo = z + static_cast<std::size_t>(std::ceil(std::log(double(n))));
      std::set<Color> seen;
      std::size_t total = 0;
      for (const auto& part : p.parts) {
        total += part.size();
        seen.insert(part.begin(), part.end());
      }
      std::set<Color> palette;
      for (Vertex v = 0; v < n; ++v) palette.insert(lists[v].begin(), lists[v].end());
      o.expect(total == seen.size(), "parts overlap");
      o.expect(seen == palette, "parts do not cover the palette");
      for (Vertex v = 0; v < n; ++v) {
        const auto s = p.sublists[v].size();
        o.expect(s >= lo && s <= 9 * lo, "sublist size " + str(s) + " outside window");
      }
    }
  }
  if (o.ok) o.detail = str(runs) + " runs, window [5,45]";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::size_t pt_ok = 0, nu_ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto h = random_hypergraph(40, 25, 3, 8, seed);
    auto p = PachTardosParams::desk(2, stats(h).overlap);
    auto lists = random_lists(40, p.rounds, 3 * p.rounds, seed + 100);
    try {
      auto run = pach_tardos_color(h, lists, p, seed);
      pt_ok += verify(h, run.coloring, Mode::Partial, lists).ok && all_edges_ok(h, as_ints(run.coloring));
    } catch (const ColoringFailure&) {
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto h = random_hypergraph(200, 40, 8, 16, seed);
    auto p = NearUniformParams::desk(8, 16, stats(h).overlap, 32);
    auto lists = random_lists(200, p.list_size, 2 * p.list_size, seed + 1000);
    try {
      auto run = near_uniform_color(h, lists, p, seed);
      nu_ok += verify(h, run.coloring, Mode::Full, lists).ok && all_edges_ok(h, as_ints(run.coloring));
    } catch (const ColoringFailure&) {
    }
  }
  o.expect(pt_ok >= 95, "round process " + str(pt_ok) + "/100");
  o.expect(nu_ok >= 95, "near-uniform " + str(nu_ok) + "/100");
  if (o.ok) o.detail = "round process " + str(pt_ok) + "/100, near-uniform " + str(nu_ok) + "/100";
  return o;
}

Outcome ac8() {
  Outcome o;
  std::size_t with_b = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_graph_min_degree(60 + 2 * seed, 15, 1, seed);
    o.expect(g.max_degree() <= 15, "generator exceeded max degree");
    const std::size_t K = cfcn_min_K(g);
    const std::size_t r = cfcn_list_size(g, K);
    auto lists = random_lists(g.num_vertices(), r, 2 * r, seed);
    try {
      auto res = cfcn_general(g, lists, K, {}, seed);
      auto h = closed_neighborhood_hypergraph(g);
      o.expect(verify(h, res.coloring, Mode::Partial, lists).ok && all_edges_ok(h, as_ints(res.coloring)),
               "cfcn output fails on seed " + std::to_string(seed));
      with_b += !res.decomposition.B.empty();
    } catch (const std::exception& e) {
      o.fail("cfcn seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = line_graph(random_graph_min_degree(20, 8, 2, seed));
    o.expect(g.num_vertices() <= 100 && g.max_degree() <= 15 && g.min_degree() > 0,
             "line graph outside the family on seed " + std::to_string(seed));
    auto plan = cfon_claw_plan(g);
    auto lists = random_lists(g.num_vertices(), plan.r, 2 * plan.r, seed);
    try {
      auto res = cfon_claw(g, lists, {}, seed);
      auto ho = open_neighborhood_hypergraph(g), hc = closed_neighborhood_hypergraph(g);
      o.expect(verify(ho, res.coloring, Mode::Partial, lists).ok && all_edges_ok(ho, as_ints(res.coloring)) &&
                   all_edges_ok(hc, as_ints(res.coloring)),
               "claw output fails on seed " + std::to_string(seed));
    } catch (const std::exception& e) {
      o.fail("claw seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  o.expect(with_b > 0, "no cfcn instance had low-degree vertices");
  if (o.ok) o.detail = "20 + 20 graphs, " + str(with_b) + " with nonempty B";
  return o;
}

Outcome ac9() {
  Outcome o;
  std::size_t graphs = 0, decided = 0, skipped = 0;
  OracleBudget cap;
  cap.max_nodes = 20000;
  cap.max_seconds = 0.02;
  auto probe = [&](const Hypergraph& h, std::size_t k, ProbeVerdict forbidden, const std::string& what) {
    if (k == 0) return;
    auto v = choice_probe(h, k, Mode::Full, cap).verdict;
    if (v == ProbeVerdict::Indeterminate) {
      ++skipped;
      return;
    }
    ++decided;
    o.expect(v != forbidden, what);
  };
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& g : connected_graphs(n)) {
      ++graphs;
      auto on = chi_value(chi_on(g, Mode::Full));
      auto cn = chi_value(chi_cn(g, Mode::Full));
      o.expect(on != SIZE_MAX && cn != SIZE_MAX, "oracle did not finish");
      o.expect(cn <= 2 * on, "chi_CN > 2 chi_ON on " + to_text(g));
      o.expect(cn <= chromatic_number(g), "chi_CN > chi on " + to_text(g));
      const double ln = std::log(double(n));
      auto ho = open_neighborhood_hypergraph(g), hc = closed_neighborhood_hypergraph(g);
      probe(ho, on - 1, ProbeVerdict::Choosable, "ch_ON < chi_ON");
      probe(hc, cn - 1, ProbeVerdict::Choosable, "ch_CN < chi_CN");
      probe(ho, static_cast<std::size_t>(std::floor(on * ln + 1)), ProbeVerdict::Counterexample,
            "ch_ON > chi_ON ln n + 1");
      probe(hc, static_cast<std::size_t>(std::floor(cn * ln + 1)), ProbeVerdict::Counterexample,
            "ch_CN > chi_CN ln n + 1");
    }
  }
  o.expect(graphs == 995, "enumerated " + str(graphs) + " graphs");
  if (o.ok)
    o.detail = str(graphs) + " graphs; probes decided " + str(decided) + ", indeterminate (skipped) " + str(skipped);
  return o;
}

// Text of every randomized output in the suite for one pass.
std::string randomized_transcript() {
  std::ostringstream out;
  auto g = random_graph(40, 0.2, 3);
  out << to_text(g) << to_text(random_hypergraph(20, 10, 2, 6, 3)) << to_text(random_lists(10, 4, 9, 3));
  out << to_text(random_graph_min_degree(30, 10, 4, 3));

  auto lists = random_lists(16, partition_list_size(16, 2, 3), 200, 1);
  auto p = palette_partition(lists, 2, 3, std::vector<std::size_t>(16, 1), 9);
  out << to_text(p.target_assignment()) << p.attempts << "\n";

  auto h = random_hypergraph(40, 25, 3, 8, 4);
  auto pp = PachTardosParams::desk(2, stats(h).overlap);
  out << to_text(pach_tardos_color(h, random_lists(40, pp.rounds, 3 * pp.rounds, 4), pp, 4).coloring);

  auto hn = random_hypergraph(200, 40, 8, 16, 4);
  auto np = NearUniformParams::desk(8, 16, stats(hn).overlap, 32);
  out << to_text(near_uniform_color(hn, random_lists(200, np.list_size, 2 * np.list_size, 4), np, 4).coloring);

  auto dense = random_graph_min_degree(80, 40, 36, 2);
  for (Vertex v : sample_core_subset(dense, CoreSubsetParams::desk(12), 2).vertices) out << v << ' ';
  out << "\n";
  const std::size_t dr = dense_list_size(dense, false);
  out << to_text(cfon_dense_min_degree(dense, random_lists(80, dr, 2 * dr, 2), {}, 2).coloring);

  auto mp = min_degree_params(complete_graph(9), true);
  out << to_text(cfcn_min_degree(complete_graph(9), random_lists(9, mp.rounds, 2 * mp.rounds, 6), {}, 6).coloring);

  const std::size_t K = cfcn_min_K(g);
  const std::size_t r = cfcn_list_size(g, K);
  out << to_text(cfcn_general(g, random_lists(40, r, 2 * r, 5), K, {}, 5).coloring);

  auto lg = line_graph(random_graph_min_degree(14, 6, 2, 8));
  auto plan = cfon_claw_plan(lg);
  out << to_text(cfon_claw(lg, random_lists(lg.num_vertices(), plan.r, 2 * plan.r, 8), {}, 8).coloring);

  Hypergraph tri(3, {{0, 1, 2}});
  auto full = cf_full_from_partial_list(
      tri, random_lists(3, partition_list_size(3, 1, 2), 90, 5), 1,
      [](const Hypergraph& x, const ListAssignment& l, std::uint64_t) {
        return *list_cf_color(x, l, Mode::Partial).coloring;
      },
      11);
  out << to_text(full.coloring);

  std::istringstream plan_text(
      "family=random-graph\nn=24\np=0.3\nalgorithms=cfcn-general\nseeds=1..3\n\n"
      "family=random-hypergraph\nn=30\nm=12\nlo=3\nhi=7\nalgorithms=pach-tardos,near-uniform,list-cf\nseeds=1..3\n");
  auto rows = run_plan(parse_plan(plan_text), 3);
  write_csv_header(out);
  for (auto row : rows) {
    row.wall_ms = 0;
    write_csv_row(out, row);
  }
  return out.str();
}

Outcome ac10() {
  Outcome o;
  auto a = randomized_transcript();
  auto b = randomized_transcript();
  o.expect(a == b, "transcripts differ");
  if (o.ok) o.detail = std::to_string(a.size()) + " bytes identical across two passes";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "subdivided complete graphs", 60, ac1},
      {"AC2", "stars", 30, ac2},
      {"AC3", "subdivided K_{2,4}", 600, ac3},
      {"AC4", "discrete interval hypergraphs", 60, ac4},
      {"AC5", "partial vs full and degree+1 lists", 300, ac5},
      {"AC6", "palette partition", 30, ac6},
      {"AC7", "randomized colorer gates", 600, ac7},
      {"AC8", "composite colorers", 900, ac8},
      {"AC9", "inequalities on small connected graphs", 1800, ac9},
      {"AC10", "determinism", 600, ac10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s));
    failed += !o.ok;
    std::printf("[%s] %-5s %-40s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
