#include "cfc/lll.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "cfc/core.hpp"
#include "rng.hpp"

namespace cfc {

const char* to_string(ParamMode mode) { return mode == ParamMode::Paper ? "paper" : "desk"; }

ParamMode param_mode_from_string(const std::string& text) {
  if (text == "paper") return ParamMode::Paper;
  if (text == "desk") return ParamMode::Desk;
  throw InvalidInput("unknown parameter mode '" + text + "' (expected paper|desk)");
}

Trimmed trim(const Hypergraph& h, std::size_t t) {
  if (t == 0) throw InvalidInput("trim needs t >= 1");
  const std::size_t keep = 2 * t - 1;
  std::vector<char> designated(h.num_vertices(), 0);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(e);
    if (edge.size() < keep) {
      throw InvalidInput("edge " + std::to_string(e) + " has " + std::to_string(edge.size()) +
                         " vertices, fewer than 2t-1=" + std::to_string(keep));
    }
    for (std::size_t i = 0; i < keep; ++i) designated[edge[i]] = 1;
  }
  Trimmed out;
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    if (designated[v]) out.core.push_back(v);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(h.num_edges());
  for (const auto& edge : h.edges()) {
    std::vector<Vertex> kept;
    for (Vertex v : edge)
      if (designated[v]) kept.push_back(v);
    edges.push_back(std::move(kept));
  }
  out.hypergraph = Hypergraph(h.num_vertices(), std::move(edges));
  return out;
}

namespace {

double root(std::size_t gamma, std::size_t t) {
  return std::pow(static_cast<double>(std::max<std::size_t>(gamma, 1)), 1.0 / static_cast<double>(t));
}

std::size_t round_cap(double c_T, std::size_t t, std::size_t gamma) {
  const double g = static_cast<double>(std::max<std::size_t>(gamma, 1));
  return static_cast<std::size_t>(std::ceil(c_T * static_cast<double>(t) * root(gamma, t) * std::log(g + 2)));
}

}  // namespace

PachTardosParams PachTardosParams::paper(std::size_t t, std::size_t gamma, double c_T) {
  if (t == 0) throw InvalidInput("t must be positive");
  PachTardosParams p;
  p.t = t;
  p.gamma = gamma;
  p.q = 1.0 / (30.0 * static_cast<double>(t) * root(gamma, t));
  p.rounds = round_cap(c_T, t, gamma);
  p.mode = ParamMode::Paper;
  return p;
}

PachTardosParams PachTardosParams::desk(std::size_t t, std::size_t gamma, double q_scale,
                                        double c_T) {
  if (t == 0) throw InvalidInput("t must be positive");
  PachTardosParams p;
  p.t = t;
  p.gamma = gamma;
  p.q = std::min(0.5, q_scale / (30.0 * static_cast<double>(t) * root(gamma, t)));
  p.rounds = round_cap(c_T, t, gamma);
  p.mode = ParamMode::Desk;
  return p;
}

namespace {

// Whether some vertex of the edge holds a color nobody else in it has.
bool witnessed(std::span<const Vertex> edge, const PartialColoring& c,
               std::unordered_map<Color, std::size_t>& count) {
  count.clear();
  for (Vertex v : edge)
    if (auto col = c[v]) ++count[*col];
  for (Vertex v : edge)
    if (auto col = c[v]; col && count[*col] == 1) return true;
  return false;
}

}  // namespace

ColoringRun pach_tardos_color(const Hypergraph& h, const ListAssignment& lists,
                              const PachTardosParams& p, std::uint64_t seed) {
  if (lists.size() != h.num_vertices()) throw InvalidInput("list assignment size does not match hypergraph");
  if (!(p.q > 0 && p.q < 1)) throw InvalidInput("pick probability q must lie in (0,1)");
  auto s = stats(h);
  if (s.overlap > p.gamma) {
    throw InvalidInput("an edge meets " + std::to_string(s.overlap) +
                       " other edges, more than gamma=" + std::to_string(p.gamma));
  }
  Trimmed trimmed = trim(h, p.t);

  ColoringRun run;
  std::size_t rounds = p.rounds;
  std::size_t shortest = SIZE_MAX;
  for (Vertex v : trimmed.core) shortest = std::min(shortest, lists[v].size());
  if (!trimmed.core.empty() && shortest < rounds) {
    run.warnings.push_back("lists shorter than T=" + std::to_string(rounds) + "; capping T at " +
                           std::to_string(shortest));
    rounds = shortest;
  }

  std::unordered_map<Color, std::size_t> count;
  std::vector<Vertex> uncolored;
  for (std::size_t attempt = 0; attempt < p.restarts; ++attempt) {
    detail::Rng rng(detail::derive_seed(seed, attempt));
    std::bernoulli_distribution pick(p.q);
    PartialColoring c(h.num_vertices());
    uncolored = trimmed.core;
    for (std::size_t i = 0; i < rounds && !uncolored.empty(); ++i) {
      std::size_t kept = 0;
      for (Vertex v : uncolored) {
        if (pick(rng)) {
          c.set(v, lists[v][i]);
        } else {
          uncolored[kept++] = v;
        }
      }
      uncolored.resize(kept);
    }

    AttemptDiagnostics diag;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      if (!witnessed(h.edge(e), c, count)) ++diag.unwitnessed;
      for (Vertex v : trimmed.hypergraph.edge(e)) {
        if (!c.is_colored(v)) {
          ++diag.incomplete;
          break;
        }
      }
    }
    run.diagnostics.push_back(diag);
    if (diag.unwitnessed == 0 && verify(h, c, Mode::Partial, lists).ok) {
      run.coloring = std::move(c);
      run.attempts = attempt + 1;
      return run;
    }
    if (attempt + 1 == p.restarts) {
      throw ColoringFailure("pach_tardos_color: no valid coloring after " +
                                std::to_string(p.restarts) + " restarts",
                            p.restarts, std::move(run.diagnostics),
                            verify(h, c, Mode::Partial).violated_edges);
    }
  }
  throw ColoringFailure("pach_tardos_color: restart budget is zero", 0, {}, {});
}

NearUniformParams NearUniformParams::paper(std::size_t beta, std::size_t gamma) {
  NearUniformParams p;
  const double g = static_cast<double>(std::max<std::size_t>(gamma, 1));
  p.alpha = std::max<std::size_t>(4096, static_cast<std::size_t>(std::ceil(136.0 * std::log(16.0 * g))));
  p.beta = beta;
  p.gamma = gamma;
  p.list_size = 32 * beta;
  p.mode = ParamMode::Paper;
  return p;
}

NearUniformParams NearUniformParams::desk(std::size_t alpha, std::size_t beta, std::size_t gamma,
                                          std::size_t list_factor) {
  NearUniformParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.list_size = list_factor * beta;
  p.mode = ParamMode::Desk;
  return p;
}

ColoringRun near_uniform_color(const Hypergraph& h, const ListAssignment& lists,
                               const NearUniformParams& p, std::uint64_t seed) {
  const std::size_t n = h.num_vertices();
  if (lists.size() != n) throw InvalidInput("list assignment size does not match hypergraph");
  if (p.enforce_size_window) {
    if (p.alpha > p.beta) throw InvalidInput("alpha exceeds beta");
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      std::size_t size = h.edge(e).size();
      if (size < p.alpha || size > p.beta) {
        throw InvalidInput("edge " + std::to_string(e) + " has size " + std::to_string(size) +
                           " outside [" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + "]");
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (lists[v].size() < p.list_size) {
      throw InvalidInput("vertex " + std::to_string(v) + " has " + std::to_string(lists[v].size()) +
                         " colors, fewer than list_size=" + std::to_string(p.list_size));
    }
  }

  detail::Rng rng(seed);
  auto draw = [&](Vertex v) {
    std::uniform_int_distribution<std::size_t> pick(0, lists[v].size() - 1);
    return lists[v][pick(rng)];
  };
  PartialColoring c(n);
  for (Vertex v = 0; v < n; ++v) c.set(v, draw(v));

  auto inc = h.incidence();
  std::unordered_map<Color, std::size_t> count;
  std::set<std::size_t> violated;
  for (std::size_t e = 0; e < h.num_edges(); ++e)
    if (!witnessed(h.edge(e), c, count)) violated.insert(e);

  ColoringRun run;
  std::vector<char> seen(h.num_edges(), 0);
  std::vector<std::size_t> touched;
  while (!violated.empty()) {
    if (run.resamples == p.resample_budget) {
      AttemptDiagnostics diag;
      diag.unwitnessed = violated.size();
      diag.resamples = run.resamples;
      throw ColoringFailure("near_uniform_color: " + std::to_string(violated.size()) +
                                " edges still violated after " + std::to_string(run.resamples) +
                                " resamples",
                            run.resamples, {diag},
                            std::vector<std::size_t>(violated.begin(), violated.end()));
    }
    const std::size_t e = *violated.begin();
    ++run.resamples;
    touched.clear();
    for (Vertex v : h.edge(e)) {
      c.set(v, draw(v));
      for (std::size_t f : inc[v]) {
        if (!seen[f]) {
          seen[f] = 1;
          touched.push_back(f);
        }
      }
    }
    for (std::size_t f : touched) {
      seen[f] = 0;
      if (witnessed(h.edge(f), c, count)) {
        violated.erase(f);
      } else {
        violated.insert(f);
      }
    }
  }
  if (!verify(h, c, Mode::Full, lists).ok)
    throw std::logic_error("near_uniform_color produced an invalid coloring");
  AttemptDiagnostics diag;
  diag.resamples = run.resamples;
  run.diagnostics.push_back(diag);
  run.coloring = std::move(c);
  run.attempts = 1;
  return run;
}

CoreSubsetParams CoreSubsetParams::paper(double c, double epsilon) {
  if (!(c > 0) || epsilon < 0) throw InvalidInput("core subset needs c > 0 and epsilon >= 0");
  CoreSubsetParams p;
  p.mode = ParamMode::Paper;
  p.c = c;
  p.epsilon = epsilon;
  return p;
}

CoreSubsetParams CoreSubsetParams::desk(double target_mean) {
  return desk(target_mean, target_mean / 2, 2 * target_mean);
}

CoreSubsetParams CoreSubsetParams::desk(double target_mean, double low, double high) {
  if (!(target_mean > 0) || low > high) throw InvalidInput("core subset needs target > 0 and low <= high");
  CoreSubsetParams p;
  p.mode = ParamMode::Desk;
  p.target_mean = target_mean;
  p.window_low = low;
  p.window_high = high;
  return p;
}

CoreSubset sample_core_subset(const Graph& g, const CoreSubsetParams& p, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  const double delta = static_cast<double>(g.max_degree());
  if (delta == 0) throw InvalidInput("core subset needs a graph with at least one edge");
  CoreSubset out;
  if (p.mode == ParamMode::Paper) {
    const double ln4 = std::log(4 * delta);
    const double boosted = std::pow(ln4, 1 + p.epsilon);
    if (delta >= 2) {
      const double need = p.c * delta / std::pow(std::log(delta), p.epsilon);
      if (static_cast<double>(g.min_degree()) < need) {
        throw InvalidInput("minimum degree " + std::to_string(g.min_degree()) + " is below c*D/ln^eps D = " +
                           std::to_string(need));
      }
    }
    out.pick_prob = 350 * boosted / (p.c * delta);
    out.window_low = 291 * ln4;
    out.window_high = 409 / p.c * boosted;
    out.strict = true;
    if (out.pick_prob > 1) {
      throw InvalidInput("paper pick probability " + std::to_string(out.pick_prob) +
                         " exceeds 1 at max degree " + std::to_string(g.max_degree()) +
                         "; use desk mode");
    }
  } else {
    out.pick_prob = std::min(1.0, p.target_mean / delta);
    out.window_low = p.window_low;
    out.window_high = p.window_high;
  }

  auto inside = [&](double x) {
    return out.strict ? (x > out.window_low && x < out.window_high)
                      : (x >= out.window_low && x <= out.window_high);
  };
  detail::Rng rng(seed);
  std::bernoulli_distribution pick(out.pick_prob);
  std::vector<char> in(n);
  Vertex worst = 0;
  double worst_gap = -1;
  std::size_t worst_count = 0;
  for (std::size_t attempt = 1; attempt <= p.retries; ++attempt) {
    for (Vertex v = 0; v < n; ++v) in[v] = pick(rng);
    bool good = true;
    worst_gap = -1;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t count = 0;
      for (Vertex w : g.neighbors(v)) count += in[w];
      const double x = static_cast<double>(count);
      if (!inside(x)) {
        good = false;
        double gap = std::max(out.window_low - x, x - out.window_high);
        if (gap > worst_gap) {
          worst_gap = gap;
          worst = v;
          worst_count = count;
        }
      }
    }
    if (good) {
      out.attempts = attempt;
      for (Vertex v = 0; v < n; ++v)
        if (in[v]) out.vertices.push_back(v);
      return out;
    }
  }
  throw BudgetExhausted("sample_core_subset: no subset within " + std::to_string(p.retries) +
                            " attempts; worst vertex " + std::to_string(worst) + " had " +
                            std::to_string(worst_count) + " neighbors in the subset",
                        p.retries);
}

}  // namespace cfc
