#include "cfc/composite.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "cfc/oracle.hpp"
#include "rng.hpp"

namespace cfc {
namespace {

double ln_delta(std::size_t delta) { return delta >= 1 ? std::log(static_cast<double>(delta)) : 0.0; }

std::size_t ceil_pos(double x) { return static_cast<std::size_t>(std::max(0.0, std::ceil(x - 1e-12))); }

// A stage hypergraph relabeled onto its own vertex set.
struct Compact {
  Hypergraph h;
  ListAssignment lists;
  std::vector<Vertex> global;
};

Compact compact(std::size_t n, const std::vector<Vertex>& vertices,
                const std::vector<std::vector<Vertex>>& edges,
                const std::function<std::vector<Color>(Vertex)>& list_of) {
  std::vector<std::size_t> local(n, SIZE_MAX);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  std::vector<std::vector<Vertex>> relabeled;
  relabeled.reserve(edges.size());
  for (const auto& edge : edges) {
    std::vector<Vertex> e;
    for (Vertex v : edge) {
      if (local[v] == SIZE_MAX) throw std::logic_error("stage edge leaves its vertex set");
      e.push_back(local[v]);
    }
    relabeled.push_back(std::move(e));
  }
  std::vector<std::vector<Color>> lists;
  lists.reserve(vertices.size());
  for (Vertex v : vertices) lists.push_back(list_of(v));
  return {Hypergraph(vertices.size(), std::move(relabeled)), ListAssignment(std::move(lists)), vertices};
}

std::size_t paste(const PartialColoring& local, const std::vector<Vertex>& global, PartialColoring& out) {
  std::set<Color> used;
  for (Vertex i = 0; i < local.size(); ++i) {
    if (auto c = local[i]) {
      if (out.is_colored(global[i]))
        throw std::logic_error("vertex " + std::to_string(global[i]) + " colored twice");
      out.set(global[i], *c);
      used.insert(*c);
    }
  }
  return used.size();
}

std::vector<Vertex> intersect(std::span<const Vertex> sorted, const std::vector<char>& member) {
  std::vector<Vertex> out;
  for (Vertex v : sorted)
    if (member[v]) out.push_back(v);
  return out;
}

std::vector<char> membership(std::size_t n, const std::vector<Vertex>& set) {
  std::vector<char> in(n, 0);
  for (Vertex v : set) in[v] = 1;
  return in;
}

std::vector<Vertex> closed_nbhd(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  std::vector<Vertex> out(nb.begin(), nb.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

ListColorResult stage_color(const std::string& tag, const Compact& sub) {
  auto result = list_cf_color(sub.h, sub.lists, Mode::Partial);
  if (result.verdict != Verdict::Sat)
    throw StageFailure(tag, std::string("list coloring returned ") + to_string(result.verdict));
  return result;
}

}  // namespace

FullFromPartial cf_full_from_partial_list(const Hypergraph& h, const ListAssignment& lists,
                                          std::size_t z, const PartialColorer& colorer,
                                          std::uint64_t seed) {
  const std::size_t n = h.num_vertices();
  if (lists.size() != n) throw InvalidInput("list assignment size does not match hypergraph");
  FullFromPartial out;
  out.partition = palette_partition(lists, z, 2, std::vector<std::size_t>(n, 0),
                                    detail::derive_seed(seed, 0));
  ListAssignment first = out.partition.target_assignment();
  PartialColoring partial;
  try {
    partial = colorer(h, first, detail::derive_seed(seed, 1));
  } catch (const StageFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw StageFailure("partial", e.what());
  }
  auto report = verify(h, partial, Mode::Partial, first);
  if (!report.ok) throw StageFailure("partial", "colorer output is not a list CF* coloring");
  out.coloring = partial;
  for (Vertex u = 0; u < n; ++u) {
    if (out.coloring.is_colored(u)) continue;
    out.coloring.set(u, out.partition.sublist(lists, u, 1).front());
    ++out.lifted;
  }
  if (!verify(h, out.coloring, Mode::Full, lists).ok)
    throw StageFailure("lift", "completed coloring failed verification");
  return out;
}

PachTardosParams RoundOptions::params(std::size_t t, std::size_t gamma) const {
  PachTardosParams p = mode == ParamMode::Paper ? PachTardosParams::paper(t, gamma)
                                                : PachTardosParams::desk(t, gamma, q_scale, c_T);
  p.restarts = restarts;
  return p;
}

namespace {

CfcnDecomposition cfcn_structure(const Graph& g, const RoundOptions& opt) {
  const std::size_t n = g.num_vertices();
  CfcnDecomposition d;
  d.delta = g.max_degree();
  const double ln = ln_delta(d.delta);
  d.theta = std::max<std::size_t>(1, ceil_pos(ln));
  d.ln2 = std::max<std::size_t>(1, ceil_pos(ln * ln));
  for (Vertex v = 0; v < n; ++v) (g.degree(v) >= d.theta ? d.A : d.B).push_back(v);
  auto inA = membership(n, d.A);
  for (Vertex v : d.A) (intersect(g.neighbors(v), inA).size() >= d.theta ? d.A1 : d.A2).push_back(v);

  std::vector<std::vector<Vertex>> e1, e2;
  for (Vertex v : d.A1) e1.push_back(intersect(closed_nbhd(g, v), inA));
  auto inB = membership(n, d.B);
  for (Vertex v = 0; v < n; ++v)
    if (!(inA[v] && std::binary_search(d.A1.begin(), d.A1.end(), v)))
      e2.push_back(intersect(closed_nbhd(g, v), inB));
  d.H1 = Hypergraph(n, std::move(e1));
  d.H2 = Hypergraph(n, std::move(e2));

  d.t = std::max<std::size_t>(1, ceil_pos((ln + 1) / 2));
  d.gamma = stats(d.H1).overlap;
  if (d.gamma > d.delta * d.delta)
    throw std::logic_error("H1 overlap " + std::to_string(d.gamma) + " exceeds Delta^2");
  d.rounds = d.A1.empty() ? 0 : opt.params(d.t, d.gamma).rounds;
  const std::size_t need = d.rounds + (d.theta - 1) + d.theta * d.theta + (d.theta + 1);
  d.K_min = std::max<std::size_t>(1, (need + d.ln2 - 1) / d.ln2);
  return d;
}

}  // namespace

std::size_t cfcn_min_K(const Graph& g, const RoundOptions& opt) { return cfcn_structure(g, opt).K_min; }

std::size_t cfcn_list_size(const Graph& g, std::size_t K) {
  const double ln = ln_delta(g.max_degree());
  return K * std::max<std::size_t>(1, ceil_pos(ln * ln));
}

CfcnResult cfcn_general(const Graph& g, const ListAssignment& lists, std::size_t K,
                        const RoundOptions& opt, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (lists.size() != n) throw InvalidInput("list assignment size does not match graph");
  CfcnResult result;
  CfcnDecomposition& d = result.decomposition;
  d = cfcn_structure(g, opt);
  d.K = K;
  if (K < d.K_min) throw InvalidInput("K=" + std::to_string(K) + " is below the minimum " + std::to_string(d.K_min));
  const std::size_t r = cfcn_list_size(g, K);
  for (Vertex v = 0; v < n; ++v) {
    const bool bad = opt.mode == ParamMode::Paper ? lists[v].size() != r : lists[v].size() < r;
    if (bad) {
      throw InvalidInput("vertex " + std::to_string(v) + " has " + std::to_string(lists[v].size()) +
                         " colors; lists need K*ceil(ln^2 Delta) = " + std::to_string(r));
    }
  }

  auto inA = membership(n, d.A);
  auto inA1 = membership(n, d.A1);
  auto inB = membership(n, d.B);
  PartialColoring f(n);

  // H1 on A by the round process.
  if (!d.A1.empty()) {
    Compact sub = compact(n, d.A, d.H1.edges(), [&](Vertex v) {
      return std::vector<Color>(lists[v].begin(), lists[v].end());
    });
    try {
      result.h1_run = pach_tardos_color(sub.h, sub.lists, opt.params(d.t, d.gamma),
                                        detail::derive_seed(seed, 1));
    } catch (const std::exception& e) {
      throw StageFailure("H1", e.what());
    }
    result.h1_colors = paste(result.h1_run.coloring, sub.global, f);
    auto report = verify(d.H1, f, Mode::Partial);
    if (!report.ok) throw StageFailure("H1", "round-process coloring does not verify");
    for (std::size_t i = 0; i < d.A1.size(); ++i) d.witness_color.push_back(*f[*report.witness[i]]);
  }

  // Trim the B-lists: S_b (witness colors of A1-neighbors), T_b (A-colors
  // near any w in N[b] ∩ (A2 ∪ B)).
  d.S.assign(n, {});
  d.T.assign(n, {});
  d.L2.assign(n, {});
  std::vector<Color> color_of_A1(n, 0);
  for (std::size_t i = 0; i < d.A1.size(); ++i) color_of_A1[d.A1[i]] = d.witness_color[i];
  auto h2_degree = d.H2.degrees();
  for (Vertex b : d.B) {
    std::set<Color> S, T;
    for (Vertex v : g.neighbors(b))
      if (inA1[v]) S.insert(color_of_A1[v]);
    for (Vertex w : closed_nbhd(g, b)) {
      if (inA1[w]) continue;
      for (Vertex a : closed_nbhd(g, w))
        if (inA[a] && f.is_colored(a)) T.insert(*f[a]);
    }
    if (S.size() + 1 > d.theta) throw std::logic_error("|S_b| reached theta");
    if (T.size() > d.theta * d.theta) throw std::logic_error("|T_b| exceeds theta^2");
    d.S[b].assign(S.begin(), S.end());
    d.T[b].assign(T.begin(), T.end());
    for (Color c : lists[b])
      if (!S.count(c) && !T.count(c)) d.L2[b].push_back(c);
    if (d.L2[b].size() < h2_degree[b] + 1) {
      throw StageFailure("H2", "vertex " + std::to_string(b) + " keeps " + std::to_string(d.L2[b].size()) +
                                   " colors after trimming, needs " + std::to_string(h2_degree[b] + 1));
    }
  }

  // H2 on B from the trimmed lists.
  if (d.H2.num_edges() > 0) {
    Compact sub = compact(n, d.B, d.H2.edges(), [&](Vertex v) { return d.L2[v]; });
    auto colored = stage_color("H2", sub);
    result.h2_colors = paste(*colored.coloring, sub.global, f);
  }

  // Structural checks of the S_b mechanism.
  if (!d.A1.empty()) {
    auto report = verify(d.H1, f, Mode::Partial);
    for (std::size_t i = 0; i < d.A1.size(); ++i) {
      Vertex v = d.A1[i];
      if (!report.witness[i] || !inA[*report.witness[i]])
        throw std::logic_error("A1 vertex " + std::to_string(v) + " lost its witness in A");
      for (Vertex b : g.neighbors(v))
        if (inB[b] && f[b] == d.witness_color[i])
          throw std::logic_error("B-neighbor of " + std::to_string(v) + " repeats its witness color");
    }
  }

  if (!verify(closed_neighborhood_hypergraph(g), f, Mode::Partial, lists).ok)
    throw StageFailure("merge", "merged coloring is not a list CFCN* coloring");
  result.coloring = std::move(f);
  return result;
}

ClawPlan cfon_claw_plan(const Graph& g, const ClawOptions& opt) {
  ClawPlan plan;
  plan.k = claw_number(g) + 1;
  plan.delta = g.max_degree();
  const double ln = ln_delta(plan.delta);
  const double k = static_cast<double>(plan.k);
  const std::size_t b_paper = ceil_pos(std::max(4096.0, 272.0 * std::log(4.0 * std::max<double>(1, plan.delta))));
  if (opt.mode == ParamMode::Paper) {
    plan.b = b_paper;
    plan.nu_factor = 32;
    plan.z = std::max<std::size_t>(1, ceil_pos(131072.0 * k * ln));
  } else {
    plan.b = std::max<std::size_t>(2, ceil_pos(opt.sigma * static_cast<double>(b_paper)));
    plan.nu_factor = opt.nu_list_factor;
    const std::size_t beta = (plan.k - 1) * plan.b;
    plan.z = std::max({plan.nu_factor * beta, beta + 1,
                       static_cast<std::size_t>(std::floor(k * ln)) + 1, plan.k});
  }
  plan.r = partition_list_size(g.num_vertices(), plan.z, 5);
  return plan;
}

ClawResult cfon_claw(const Graph& g, const ListAssignment& lists, const ClawOptions& opt,
                     std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (lists.size() != n) throw InvalidInput("list assignment size does not match graph");
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0) throw InvalidInput("vertex " + std::to_string(v) + " is isolated");

  ClawResult result;
  ClawDecomposition& d = result.decomposition;
  d.plan = cfon_claw_plan(g, opt);
  const auto& plan = d.plan;
  const double klog = static_cast<double>(plan.k) * ln_delta(plan.delta);

  d.A = maximal_independent_set(g, detail::derive_seed(seed, 0));
  for (Vertex v : d.A) (static_cast<double>(g.degree(v)) <= klog ? d.A_L : d.A_H).push_back(v);
  std::vector<char> inX(n, 0);
  for (Vertex v : d.A_L)
    for (Vertex w : g.neighbors(v)) inX[w] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (inX[v]) d.X.push_back(v);
  auto inA = membership(n, d.A);
  auto inAL = membership(n, d.A_L);
  auto inAH = membership(n, d.A_H);

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (!inA[v] && !inX[v]) rest.push_back(v);
  d.classes = greedy_proper_color(g, rest);
  for (std::size_t i = 0; i < d.classes.size(); ++i)
    for (Vertex v : d.classes[i]) (i < plan.b ? d.B : d.C).push_back(v);
  std::sort(d.B.begin(), d.B.end());
  std::sort(d.C.begin(), d.C.end());

  // Structure asserted before any coloring.
  for (Vertex v = 0; v < n; ++v) {
    bool hits_A = inA[v];
    for (Vertex w : g.neighbors(v)) {
      if (inA[v] && inA[w]) throw std::logic_error("A is not independent");
      hits_A = hits_A || inA[w];
    }
    if (!hits_A) throw std::logic_error("A is not maximal at vertex " + std::to_string(v));
  }
  for (Vertex v : rest) {
    bool has_high = false;
    for (Vertex w : g.neighbors(v)) {
      if (inAL[w]) throw std::logic_error("vertex outside A ∪ X touches A_L");
      has_high = has_high || inAH[w];
    }
    if (!has_high) throw std::logic_error("vertex " + std::to_string(v) + " has no neighbor in A_H");
  }
  std::vector<std::size_t> class_of(n, SIZE_MAX);
  for (std::size_t i = 0; i < d.classes.size(); ++i)
    for (Vertex v : d.classes[i]) class_of[v] = i;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::size_t> per_class(d.classes.size(), 0);
    for (Vertex w : g.neighbors(v))
      if (class_of[w] != SIZE_MAX) ++per_class[class_of[w]];
    for (std::size_t i = 0; i < per_class.size(); ++i) {
      if (per_class[i] > plan.k - 1)
        throw std::logic_error("vertex " + std::to_string(v) + " has more than k-1 neighbors in a class");
      if (class_of[v] != SIZE_MAX && i < class_of[v] && per_class[i] == 0)
        throw std::logic_error("greedy class order broken at vertex " + std::to_string(v));
    }
  }

  auto inB = membership(n, d.B);
  auto inC = membership(n, d.C);
  for (Vertex v : d.A) {
    bool touches_X = false;
    for (Vertex w : g.neighbors(v)) touches_X = touches_X || inX[w];
    (touches_X ? d.A_X : d.A_Xbar).push_back(v);
  }

  d.parts = {d.B, d.A_H, d.A_L, d.X, d.C};
  std::vector<std::size_t> targets(n, SIZE_MAX);
  for (std::size_t j = 0; j < 5; ++j)
    for (Vertex v : d.parts[j]) {
      if (targets[v] != SIZE_MAX) throw std::logic_error("stage vertex sets overlap");
      targets[v] = j;
    }
  for (Vertex v = 0; v < n; ++v)
    if (targets[v] == SIZE_MAX) throw std::logic_error("stage vertex sets do not cover V");
  d.partition = palette_partition(lists, plan.z, 5, targets, detail::derive_seed(seed, 1),
                                  opt.partition_attempts);
  auto sub_list = [&](Vertex v) { return d.partition.sublists[v]; };

  std::array<std::vector<std::vector<Vertex>>, 5> edges;
  for (Vertex v : d.C) edges[0].push_back(intersect(g.neighbors(v), inB));
  const std::size_t core_edges = edges[0].size();
  for (Vertex v : d.A_Xbar) {
    auto inside_C = intersect(g.neighbors(v), inC);
    if (inside_C.empty()) {
      d.stage1_extra.push_back(v);
      edges[0].push_back(intersect(g.neighbors(v), inB));
    } else {
      edges[4].push_back(std::move(inside_C));
    }
  }
  for (Vertex v : d.B) edges[1].push_back(intersect(g.neighbors(v), inAH));
  for (Vertex v : d.X) edges[2].push_back(intersect(g.neighbors(v), inAL));
  auto inXv = membership(n, d.X);
  for (Vertex v : d.A_X) edges[3].push_back(intersect(g.neighbors(v), inXv));
  for (std::size_t j = 0; j < 5; ++j) {
    for (const auto& e : edges[j])
      if (e.empty()) throw std::logic_error("stage " + std::to_string(j + 1) + " has an empty edge");
    d.stages[j] = Hypergraph(n, edges[j]);
  }

  const std::size_t beta = (plan.k - 1) * plan.b;
  for (std::size_t i = 0; i < core_edges; ++i) {
    std::size_t size = edges[0][i].size();
    if (size < plan.b || size > beta)
      throw std::logic_error("stage-1 edge of size " + std::to_string(size) + " outside [b,(k-1)b]");
  }

  PartialColoring f(n);
  if (!edges[0].empty()) {
    Compact sub = compact(n, d.B, edges[0], sub_list);
    const std::size_t gamma = stats(sub.h).overlap;
    NearUniformParams p = opt.mode == ParamMode::Paper
                              ? NearUniformParams::paper(beta, gamma)
                              : NearUniformParams::desk(plan.b, beta, gamma, plan.nu_factor);
    p.resample_budget = opt.resample_budget;
    p.enforce_size_window = d.stage1_extra.empty();
    try {
      auto run = near_uniform_color(sub.h, sub.lists, p, detail::derive_seed(seed, 2));
      result.resamples = run.resamples;
      result.stage_colors[0] = paste(run.coloring, sub.global, f);
    } catch (const std::exception& e) {
      throw StageFailure("H1", e.what());
    }
  }
  static const char* tags[5] = {"H1", "H2", "H3", "H4", "H5"};
  for (std::size_t j = 1; j < 5; ++j) {
    if (edges[j].empty()) continue;
    Compact sub = compact(n, d.parts[j], edges[j], sub_list);
    auto colored = stage_color(tags[j], sub);
    result.stage_colors[j] = paste(*colored.coloring, sub.global, f);
  }

  if (!verify(open_neighborhood_hypergraph(g), f, Mode::Partial, lists).ok)
    throw StageFailure("merge", "merged coloring is not a list CFON* coloring");
  if (!verify(closed_neighborhood_hypergraph(g), f, Mode::Partial, lists).ok)
    throw StageFailure("merge", "merged coloring is not a list CFCN* coloring");
  result.coloring = std::move(f);
  return result;
}

PachTardosParams min_degree_params(const Graph& g, bool closed, const RoundOptions& opt) {
  const std::size_t delta = g.max_degree();
  const std::size_t t = std::max<std::size_t>(1, ceil_pos((ln_delta(delta) + 1) / 2));
  Hypergraph h = closed ? closed_neighborhood_hypergraph(g) : open_neighborhood_hypergraph(g);
  auto s = stats(h);
  if (s.overlap > delta * delta)
    throw std::logic_error("neighborhood overlap " + std::to_string(s.overlap) + " exceeds Delta^2");
  return opt.params(t, s.overlap);
}

namespace {

MinDegreeResult min_degree_color(const Graph& g, const ListAssignment& lists, bool closed,
                                 const RoundOptions& opt, std::uint64_t seed) {
  Hypergraph h = closed ? closed_neighborhood_hypergraph(g) : open_neighborhood_hypergraph(g);
  MinDegreeResult result;
  result.params = min_degree_params(g, closed, opt);
  const std::size_t need = 2 * result.params.t - 1;
  const std::size_t smallest = stats(h).min_edge;
  if (smallest < need) {
    throw InvalidInput("smallest neighborhood has " + std::to_string(smallest) + " vertices, below 2t-1=" +
                       std::to_string(need) + "; use the dense colorer or longer lists");
  }
  result.run = pach_tardos_color(h, lists, result.params, seed);
  result.coloring = result.run.coloring;
  return result;
}

DenseResult dense_color(const Graph& g, const ListAssignment& lists, bool closed,
                        const DenseOptions& opt, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (lists.size() != n) throw InvalidInput("list assignment size does not match graph");
  DenseResult result;
  const std::size_t delta = g.max_degree();
  if (opt.mode == ParamMode::Paper && delta < 866799) {
    result.fallback = true;
    Hypergraph h = closed ? closed_neighborhood_hypergraph(g) : open_neighborhood_hypergraph(g);
    auto colored = list_cf_color(h, lists, Mode::Partial);
    if (colored.verdict != Verdict::Sat)
      throw StageFailure("fallback", std::string("list coloring returned ") + to_string(colored.verdict));
    result.coloring = *colored.coloring;
    return result;
  }

  CoreSubsetParams cp = opt.mode == ParamMode::Paper
                            ? CoreSubsetParams::paper(opt.c, opt.epsilon)
                            : CoreSubsetParams::desk(opt.target_mean, opt.window_low, opt.window_high);
  cp.retries = opt.retries;
  result.core = sample_core_subset(g, cp, detail::derive_seed(seed, 0));
  auto inCore = membership(n, result.core.vertices);
  std::vector<std::vector<Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) {
    auto e = closed ? intersect(closed_nbhd(g, v), inCore) : intersect(g.neighbors(v), inCore);
    if (e.empty()) throw std::logic_error("core subset misses the neighborhood of " + std::to_string(v));
    edges.push_back(std::move(e));
  }
  Compact sub = compact(n, result.core.vertices, edges, [&](Vertex v) {
    return std::vector<Color>(lists[v].begin(), lists[v].end());
  });
  const std::size_t gamma = stats(sub.h).overlap;
  const std::size_t extra = closed ? 1 : 0;
  if (opt.mode == ParamMode::Paper) {
    result.params = NearUniformParams::paper(static_cast<std::size_t>(result.core.window_high) + extra, gamma);
    result.params.alpha = static_cast<std::size_t>(std::ceil(272 * std::log(4.0 * static_cast<double>(delta))));
  } else {
    result.params = NearUniformParams::desk(ceil_pos(result.core.window_low),
                                            static_cast<std::size_t>(std::floor(result.core.window_high)) + extra,
                                            gamma, opt.nu_list_factor);
  }
  result.params.resample_budget = opt.resample_budget;
  auto run = near_uniform_color(sub.h, sub.lists, result.params, detail::derive_seed(seed, 1));
  result.resamples = run.resamples;
  result.coloring = PartialColoring(n);
  paste(run.coloring, sub.global, result.coloring);
  return result;
}

}  // namespace

MinDegreeResult cfon_min_degree(const Graph& g, const ListAssignment& lists, const RoundOptions& opt,
                                std::uint64_t seed) {
  return min_degree_color(g, lists, false, opt, seed);
}

MinDegreeResult cfcn_min_degree(const Graph& g, const ListAssignment& lists, const RoundOptions& opt,
                                std::uint64_t seed) {
  return min_degree_color(g, lists, true, opt, seed);
}

std::size_t dense_list_size(const Graph& g, bool closed, const DenseOptions& opt) {
  const std::size_t delta = g.max_degree();
  if (opt.mode == ParamMode::Paper && delta < 866799) return delta + (closed ? 2 : 1);
  if (opt.mode == ParamMode::Paper) {
    const double high = 409 / opt.c * std::pow(std::log(4.0 * static_cast<double>(delta)), 1 + opt.epsilon);
    return 32 * (static_cast<std::size_t>(high) + (closed ? 1 : 0));
  }
  return opt.nu_list_factor * (static_cast<std::size_t>(std::floor(opt.window_high)) + (closed ? 1 : 0));
}

DenseResult cfon_dense_min_degree(const Graph& g, const ListAssignment& lists,
                                  const DenseOptions& opt, std::uint64_t seed) {
  return dense_color(g, lists, false, opt, seed);
}

DenseResult cfcn_dense_min_degree(const Graph& g, const ListAssignment& lists,
                                  const DenseOptions& opt, std::uint64_t seed) {
  return dense_color(g, lists, true, opt, seed);
}

}  // namespace cfc
