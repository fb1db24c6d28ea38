#include "cfc/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "rng.hpp"

namespace cfc {

Graph subdivided_complete(std::size_t n) {
  if (n < 2) throw InvalidInput("subdivided_complete needs n >= 2");
  Graph g(n + n * (n - 1) / 2);
  Vertex s = n;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++s) {
      g.add_edge(i, s);
      g.add_edge(j, s);
    }
  return g;
}

Graph subdivided_biclique(std::size_t d, std::size_t m) {
  if (d < 1 || m < 1) throw InvalidInput("subdivided_biclique needs d, m >= 1");
  Graph g(d + m + d * m);
  for (Vertex i = 0; i < d; ++i)
    for (Vertex j = 0; j < m; ++j) {
      Vertex s = d + m + i * m + j;
      g.add_edge(i, s);
      g.add_edge(d + j, s);
    }
  return g;
}

PartialColoring prop3_cfon3_coloring(std::size_t d, std::size_t m) {
  if (d < 1 || m < d) throw InvalidInput("prop3 coloring needs 1 <= d <= m");
  PartialColoring c(d + m + d * m);
  for (Vertex i = 0; i < d; ++i) c.set(i, 1);
  for (Vertex j = 0; j < m; ++j) c.set(d + j, 2);
  for (Vertex i = 0; i < d; ++i)
    for (Vertex j = 0; j < m; ++j) {
      Color col = i == j ? 1 : 2;
      if (i == d - 1 && j >= d) col = 3;
      c.set(d + m + i * m + j, col);
    }
  return c;
}

PartialColoring prop3_cfonstar_coloring(std::size_t d, std::size_t m, const ListAssignment& lists) {
  if (d < 1 || m < d) throw InvalidInput("prop3 coloring needs 1 <= d <= m");
  const std::size_t n = d + m + d * m;
  if (lists.size() != n) throw InvalidInput("list assignment size does not match K_{d,m}^{1/2}");
  if (lists.uniform_size() != 2) throw InvalidInput("prop3 partial coloring needs a 2-assignment");
  auto sub = [&](Vertex i, Vertex j) { return d + m + i * m + j; };
  PartialColoring c(n);
  for (Vertex i = 0; i < d; ++i) c.set(sub(i, i), lists[sub(i, i)][0]);
  const Color anchor = *c[sub(d - 1, d - 1)];
  for (Vertex j = d; j < m; ++j) {
    auto l = lists[sub(d - 1, j)];
    c.set(sub(d - 1, j), l[0] != anchor ? l[0] : l[1]);
  }
  for (Vertex i = 0; i < d; ++i) c.set(i, lists[i][0]);
  return c;
}

Graph star(std::size_t k) {
  if (k < 1) throw InvalidInput("star needs k >= 1");
  Graph g(k + 1);
  for (Vertex v = 1; v <= k; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph line_graph(const Graph& g) {
  auto edges = g.edge_list();
  std::vector<std::vector<Vertex>> at(g.num_vertices());
  for (Vertex e = 0; e < edges.size(); ++e) {
    at[edges[e].first].push_back(e);
    at[edges[e].second].push_back(e);
  }
  Graph l(edges.size());
  for (const auto& inc : at)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) l.add_edge(inc[i], inc[j]);
  return l;
}

Hypergraph discrete_interval_hypergraph(std::size_t n) {
  if (n < 1) throw InvalidInput("interval hypergraph needs n >= 1");
  std::vector<std::vector<Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i; j < n; ++j) {
      std::vector<Vertex> e(j - i + 1);
      std::iota(e.begin(), e.end(), i);
      edges.push_back(std::move(e));
    }
  return Hypergraph(n, std::move(edges));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0 && p <= 1)) throw InvalidInput("edge probability must lie in [0,1]");
  detail::Rng rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_graph_min_degree(std::size_t n, std::size_t max_deg, std::size_t min_deg,
                              std::uint64_t seed, std::size_t attempts) {
  if (min_deg > max_deg || max_deg >= n)
    throw InvalidInput("degree bounds need min <= max < n");
  detail::Rng rng(seed);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::uniform_int_distribution<std::size_t> target(min_deg, max_deg);
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), target(rng), v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(n);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      Vertex u = stubs[i], v = stubs[i + 1];
      if (u != v && g.degree(u) < max_deg && g.degree(v) < max_deg) g.add_edge(u, v);
    }
    // Top up deficient vertices with random partners that still have room.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (Vertex u : order) {
      if (g.degree(u) >= min_deg) continue;
      std::vector<Vertex> room;
      for (Vertex v = 0; v < n; ++v)
        if (v != u && !g.has_edge(u, v) && g.degree(v) < max_deg) room.push_back(v);
      std::shuffle(room.begin(), room.end(), rng);
      for (std::size_t i = 0; i < room.size() && g.degree(u) < min_deg; ++i) g.add_edge(u, room[i]);
    }
    if (g.min_degree() >= min_deg && g.max_degree() <= max_deg) return g;
  }
  throw BudgetExhausted("no graph with degrees in [" + std::to_string(min_deg) + "," +
                            std::to_string(max_deg) + "] after " + std::to_string(attempts) + " attempts",
                        attempts);
}

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t min_size,
                             std::size_t max_size, std::uint64_t seed) {
  if (min_size < 1 || min_size > max_size || max_size > n)
    throw InvalidInput("edge sizes need 1 <= min <= max <= n");
  detail::Rng rng(seed);
  std::uniform_int_distribution<std::size_t> size(min_size, max_size);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<Vertex> pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick), size(rng), rng);
    edges.push_back(std::move(pick));
  }
  return Hypergraph(n, std::move(edges));
}

ListAssignment random_lists(std::size_t n, std::size_t k, std::size_t palette, std::uint64_t seed) {
  if (k < 1 || k > palette) throw InvalidInput("list size must lie in [1, palette]");
  detail::Rng rng(seed);
  std::vector<Color> colors(palette);
  std::iota(colors.begin(), colors.end(), 0);
  std::vector<std::vector<Color>> lists(n);
  for (auto& l : lists) std::sample(colors.begin(), colors.end(), std::back_inserter(l), k, rng);
  return ListAssignment(std::move(lists));
}

ScenarioSpec read_scenario_csv(std::istream& in, double radius) {
  ScenarioSpec s;
  s.radius = radius;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      auto a = cell.find_first_not_of(" \t");
      auto b = cell.find_last_not_of(" \t");
      cells.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
    }
    if (number == 1 && !cells.empty() && cells[0] == "x") continue;
    if (cells.size() != 3) throw InvalidInput("line " + std::to_string(number) + ": expected x,y,kind");
    Point p;
    try {
      std::size_t used = 0;
      p.x = std::stod(cells[0], &used);
      if (used != cells[0].size()) throw std::invalid_argument(cells[0]);
      p.y = std::stod(cells[1], &used);
      if (used != cells[1].size()) throw std::invalid_argument(cells[1]);
    } catch (const std::exception&) {
      throw InvalidInput("line " + std::to_string(number) + ": bad coordinate");
    }
    if (cells[2] == "station")
      s.stations.push_back(p);
    else if (cells[2] == "client")
      s.clients.push_back(p);
    else
      throw InvalidInput("line " + std::to_string(number) + ": kind must be station or client");
  }
  return s;
}

Hypergraph scenario_hypergraph(const ScenarioSpec& s) {
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t c = 0; c < s.clients.size(); ++c) {
    std::vector<Vertex> in_range;
    for (Vertex v = 0; v < s.stations.size(); ++v) {
      double dx = s.stations[v].x - s.clients[c].x, dy = s.stations[v].y - s.clients[c].y;
      if (std::hypot(dx, dy) <= s.radius) in_range.push_back(v);
    }
    if (in_range.empty()) throw InvalidInput("client " + std::to_string(c) + " reaches no station");
    edges.push_back(std::move(in_range));
  }
  return Hypergraph(s.stations.size(), std::move(edges));
}

namespace {

using Code = std::uint64_t;

// Minimum upper-triangle code over relabelings that sort vertices by degree.
Code canonical_code(const std::vector<std::uint32_t>& adj) {
  const std::size_t n = adj.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](Vertex v) { return __builtin_popcount(adj[v]); };
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return deg(a) != deg(b) ? deg(a) > deg(b) : a < b;
  });
  std::vector<std::size_t> block_start;
  for (std::size_t i = 0; i < n; ++i)
    if (i == 0 || deg(order[i]) != deg(order[i - 1])) block_start.push_back(i);
  block_start.push_back(n);

  Code best = ~Code{0};
  auto encode = [&] {
    Code code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1u);
    best = std::min(best, code);
  };
  // Odometer over the permutations of every degree block.
  for (std::size_t b = 0; b + 1 < block_start.size(); ++b)
    std::sort(order.begin() + block_start[b], order.begin() + block_start[b + 1]);
  while (true) {
    encode();
    std::size_t b = 0;
    for (; b + 1 < block_start.size(); ++b)
      if (std::next_permutation(order.begin() + block_start[b], order.begin() + block_start[b + 1])) break;
    if (b + 1 == block_start.size()) break;
  }
  return best;
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n < 1 || n > 8) throw InvalidInput("connected_graphs supports 1 <= n <= 8");
  std::vector<std::vector<std::uint32_t>> level{{0u}};
  for (std::size_t size = 2; size <= n; ++size) {
    std::set<Code> seen;
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& adj : level) {
      for (std::uint32_t mask = 1; mask < (1u << (size - 1)); ++mask) {
        auto grown = adj;
        grown.push_back(mask);
        for (Vertex v = 0; v + 1 < size; ++v)
          if (mask >> v & 1u) grown[v] |= 1u << (size - 1);
        if (seen.insert(canonical_code(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& adj : level) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (adj[u] >> v & 1u) g.add_edge(u, v);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cfc
