#include "cfc/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "rng.hpp"

namespace cfc {

Hypergraph open_neighborhood_hypergraph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0)
      throw InvalidInput("vertex " + std::to_string(v) + " is isolated; open neighborhood is empty");
    auto nb = g.neighbors(v);
    edges.emplace_back(nb.begin(), nb.end());
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

Hypergraph closed_neighborhood_hypergraph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> edge(nb.begin(), nb.end());
    edge.push_back(v);
    edges.push_back(std::move(edge));
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

namespace {

VerifyReport verify_impl(const Hypergraph& h, const PartialColoring& c, Mode mode,
                         const ListAssignment* lists) {
  if (c.size() != h.num_vertices()) {
    throw InvalidInput("coloring covers " + std::to_string(c.size()) + " vertices, hypergraph has " +
                       std::to_string(h.num_vertices()));
  }
  VerifyReport report;
  report.mode = mode;
  report.witness.resize(h.num_edges());
  std::map<Color, std::size_t> count;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    count.clear();
    for (Vertex v : h.edge(e))
      if (auto col = c[v]) ++count[*col];
    for (Vertex v : h.edge(e)) {
      auto col = c[v];
      if (col && count[*col] == 1) {
        report.witness[e] = v;
        break;
      }
    }
    if (!report.witness[e]) report.violated_edges.push_back(e);
  }
  if (mode == Mode::Full) {
    for (Vertex v = 0; v < c.size(); ++v)
      if (!c.is_colored(v)) report.uncolored.push_back(v);
  }
  if (lists) {
    if (lists->size() != h.num_vertices())
      throw InvalidInput("list assignment size does not match hypergraph");
    for (Vertex v = 0; v < c.size(); ++v)
      if (auto col = c[v]; col && !lists->contains(v, *col)) report.list_violations.push_back(v);
    report.list_ok = report.list_violations.empty();
  }
  report.ok = report.violated_edges.empty() && report.uncolored.empty() && report.list_ok.value_or(true);
  return report;
}

}  // namespace

VerifyReport verify(const Hypergraph& h, const PartialColoring& c, Mode mode) {
  return verify_impl(h, c, mode, nullptr);
}

VerifyReport verify(const Hypergraph& h, const PartialColoring& c, Mode mode,
                    const ListAssignment& lists) {
  return verify_impl(h, c, mode, &lists);
}

PartialColoring lift_partial_to_full(const Hypergraph& h, const PartialColoring& c) {
  auto report = verify(h, c, Mode::Partial);
  if (!report.ok) {
    throw InvalidInput("input is not a partial CF coloring (edge " +
                       std::to_string(report.violated_edges.front()) + " has no unique color)");
  }
  PartialColoring out = c;
  auto top = c.max_color();
  Color fresh = top ? *top + 1 : 0;
  for (Vertex v = 0; v < out.size(); ++v)
    if (!out.is_colored(v)) out.set(v, fresh);
  return out;
}

std::size_t PalettePartition::window_low() const { return z + ceil_ln(n()); }
std::size_t PalettePartition::window_high() const { return 9 * window_low(); }

std::vector<Color> PalettePartition::sublist(const ListAssignment& lists, Vertex v,
                                             std::size_t j) const {
  std::vector<Color> out;
  const auto& part = parts.at(j);
  for (Color c : lists[v])
    if (std::binary_search(part.begin(), part.end(), c)) out.push_back(c);
  return out;
}

std::size_t partition_list_size(std::size_t n, std::size_t z, std::size_t t) {
  return 5 * t * (z + ceil_ln(n));
}

PalettePartition palette_partition(const ListAssignment& lists, std::size_t z, std::size_t t,
                                   const std::vector<std::size_t>& targets, std::uint64_t seed,
                                   std::size_t max_attempts) {
  const std::size_t n = lists.size();
  if (t < 2) throw InvalidInput("palette_partition needs t >= 2");
  if (z < 1) throw InvalidInput("palette_partition needs z >= 1");
  if (targets.size() != n) throw InvalidInput("targets must have one entry per vertex");
  for (std::size_t v = 0; v < n; ++v)
    if (targets[v] >= t)
      throw InvalidInput("target of vertex " + std::to_string(v) + " is outside 0.." +
                         std::to_string(t - 1));
  const std::size_t r = partition_list_size(n, z, t);
  for (std::size_t v = 0; v < n; ++v) {
    if (lists[v].size() != r) {
      throw InvalidInput("palette_partition needs an r-assignment with r=" + std::to_string(r) +
                         " (5t(z+ceil(ln n))); vertex " + std::to_string(v) + " has " +
                         std::to_string(lists[v].size()) + " colors");
    }
  }

  const auto palette = lists.palette();
  PalettePartition result;
  result.z = z;
  result.t = t;
  result.targets = targets;
  const std::size_t lo = z + ceil_ln(n);
  const std::size_t hi = 9 * lo;

  detail::Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, t - 1);
  std::vector<std::size_t> part_of(palette.size());
  auto index_of = [&](Color c) {
    return static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) -
                                    palette.begin());
  };

  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    for (auto& p : part_of) p = pick(rng);
    bool good = true;
    for (Vertex v = 0; v < n && good; ++v) {
      std::size_t hits = 0;
      for (Color c : lists[v]) hits += part_of[index_of(c)] == targets[v];
      good = hits >= lo && hits <= hi;
    }
    if (!good) continue;

    result.attempts = attempt;
    result.parts.assign(t, {});
    for (std::size_t i = 0; i < palette.size(); ++i) result.parts[part_of[i]].push_back(palette[i]);
    result.sublists.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      for (Color c : lists[v])
        if (part_of[index_of(c)] == targets[v]) result.sublists[v].push_back(c);
    }
    return result;
  }
  throw BudgetExhausted("palette_partition: no partition within the window [" + std::to_string(lo) +
                            "," + std::to_string(hi) + "] after " + std::to_string(max_attempts) +
                            " attempts",
                        max_attempts);
}

HypergraphStats stats(const Hypergraph& h) {
  HypergraphStats s;
  s.m = h.num_edges();
  auto inc = h.incidence();
  for (const auto& list : inc) s.max_degree = std::max(s.max_degree, list.size());
  if (s.m == 0) return s;
  s.min_edge = SIZE_MAX;
  std::vector<std::size_t> mark(s.m, SIZE_MAX);
  for (std::size_t e = 0; e < s.m; ++e) {
    s.min_edge = std::min(s.min_edge, h.edge(e).size());
    s.max_edge = std::max(s.max_edge, h.edge(e).size());
    std::size_t others = 0;
    mark[e] = e;
    for (Vertex v : h.edge(e)) {
      for (std::size_t f : inc[v]) {
        if (mark[f] != e) {
          mark[f] = e;
          ++others;
        }
      }
    }
    s.overlap = std::max(s.overlap, others);
  }
  return s;
}

namespace {

void mis_search(const Graph& g, std::vector<Vertex>& current, std::vector<Vertex> candidates,
                std::vector<Vertex>& best) {
  if (candidates.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  if (current.size() + candidates.size() <= best.size()) return;
  const Vertex v = candidates.front();
  std::vector<Vertex> rest;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (!g.has_edge(v, candidates[i])) rest.push_back(candidates[i]);
  current.push_back(v);
  mis_search(g, current, std::move(rest), best);
  current.pop_back();
  candidates.erase(candidates.begin());
  mis_search(g, current, std::move(candidates), best);
}

}  // namespace

std::vector<Vertex> maximum_independent_subset(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> cand(vertices.begin(), vertices.end());
  // Low degree first tends to find large sets early.
  std::stable_sort(cand.begin(), cand.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<Vertex> current, best;
  mis_search(g, current, std::move(cand), best);
  std::sort(best.begin(), best.end());
  return best;
}

std::size_t claw_number(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) <= best) continue;
    best = std::max(best, maximum_independent_subset(g, g.neighbors(v)).size());
  }
  return best;
}

std::vector<Vertex> maximal_independent_set(const Graph& g, std::uint64_t seed) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), Vertex{0});
  detail::Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> blocked(g.num_vertices(), 0);
  std::vector<Vertex> out;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    out.push_back(v);
    blocked[v] = 1;
    for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> greedy_proper_color(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::size_t> color(g.num_vertices(), SIZE_MAX);
  std::vector<std::vector<Vertex>> classes;
  std::vector<char> used;
  for (Vertex v : order) {
    used.assign(classes.size() + 1, 0);
    for (Vertex w : g.neighbors(v))
      if (color[w] != SIZE_MAX) used[color[w]] = 1;
    std::size_t c = 0;
    while (used[c]) ++c;
    color[v] = c;
    if (c == classes.size()) classes.emplace_back();
    classes[c].push_back(v);
  }
  return classes;
}

}  // namespace cfc
